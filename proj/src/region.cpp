#include "crackmd/region.hpp"

namespace crackmd {

struct Region::BoxNode final : Node {
    Vec3 lo, hi;
    BoxNode(const Vec3& l, const Vec3& h) : lo(l), hi(h) {}
    bool contains(const Vec3& p) const override {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y &&
               p.z >= lo.z && p.z <= hi.z;
    }
};

struct Region::CylinderYNode final : Node {
    double cx, cz, r2;
    CylinderYNode(double x, double z, double r) : cx(x), cz(z), r2(r * r) {}
    bool contains(const Vec3& p) const override {
        const double dx = p.x - cx;
        const double dz = p.z - cz;
        return dx * dx + dz * dz <= r2;
    }
};

struct Region::HalfSpaceNode final : Node {
    int axis, side;
    double threshold;
    HalfSpaceNode(int a, double t, int s) : axis(a), side(s), threshold(t) {}
    bool contains(const Vec3& p) const override {
        return side >= 0 ? p[axis] >= threshold : p[axis] <= threshold;
    }
};

struct Region::NotNode final : Node {
    std::shared_ptr<const Node> inner;
    explicit NotNode(std::shared_ptr<const Node> n) : inner(std::move(n)) {}
    bool contains(const Vec3& p) const override { return !inner->contains(p); }
};

struct Region::UnionNode final : Node {
    std::shared_ptr<const Node> a, b;
    UnionNode(std::shared_ptr<const Node> a_, std::shared_ptr<const Node> b_)
        : a(std::move(a_)), b(std::move(b_)) {}
    bool contains(const Vec3& p) const override { return a->contains(p) || b->contains(p); }
};

struct Region::IntersectNode final : Node {
    std::shared_ptr<const Node> a, b;
    IntersectNode(std::shared_ptr<const Node> a_, std::shared_ptr<const Node> b_)
        : a(std::move(a_)), b(std::move(b_)) {}
    bool contains(const Vec3& p) const override { return a->contains(p) && b->contains(p); }
};

Region Region::box(const Vec3& lo, const Vec3& hi) {
    return Region(std::make_shared<BoxNode>(lo, hi));
}

Region Region::cylinder_y(double center_x, double center_z, double radius) {
    return Region(std::make_shared<CylinderYNode>(center_x, center_z, radius));
}

Region Region::half_space(int axis, double threshold, int side) {
    return Region(std::make_shared<HalfSpaceNode>(axis, threshold, side));
}

Region Region::empty() {
    struct Never final : Node {
        bool contains(const Vec3&) const override { return false; }
    };
    return Region(std::make_shared<Never>());
}

Region Region::complement() const {
    return Region(std::make_shared<NotNode>(node_));
}

Region Region::unite(const Region& other) const {
    return Region(std::make_shared<UnionNode>(node_, other.node_));
}

Region Region::intersect(const Region& other) const {
    return Region(std::make_shared<IntersectNode>(node_, other.node_));
}

} // namespace crackmd
