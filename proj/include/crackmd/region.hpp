#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "crackmd/vec3.hpp"

namespace crackmd {

// Geometric predicates used to carve defects and select boundary layers.
// All primitive regions are closed: a point exactly on the boundary is
// inside. Regions are immutable once built and cheap to copy.
class Region {
public:
    static Region box(const Vec3& lo, const Vec3& hi);
    // Infinite cylinder with axis parallel to Y through (cx, *, cz).
    static Region cylinder_y(double center_x, double center_z, double radius);
    // side=+1 keeps coord >= threshold, side=-1 keeps coord <= threshold.
    static Region half_space(int axis, double threshold, int side);
    static Region empty();

    Region complement() const;
    Region unite(const Region& other) const;
    Region intersect(const Region& other) const;

    bool contains(const Vec3& p) const { return node_ ? node_->contains(p) : false; }

private:
    struct Node {
        virtual ~Node() = default;
        virtual bool contains(const Vec3& p) const = 0;
    };
    explicit Region(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;

    struct BoxNode;
    struct CylinderYNode;
    struct HalfSpaceNode;
    struct NotNode;
    struct UnionNode;
    struct IntersectNode;
};

inline bool region_contains(const Region& r, const Vec3& p) { return r.contains(p); }

} // namespace crackmd
