#pragma once

#include <array>
#include <cmath>

#include "crackmd/error.hpp"
#include "crackmd/vec3.hpp"

namespace crackmd {

enum class Boundary { open, periodic };

// Orthorhombic simulation box. Open axes never wrap; periodic axes use the
// minimum-image convention.
struct SimBox {
    Vec3 lo;
    Vec3 hi;
    std::array<Boundary, 3> boundary{Boundary::open, Boundary::open, Boundary::open};

    SimBox() : lo{0, 0, 0}, hi{1, 1, 1} {}
    SimBox(const Vec3& lo_, const Vec3& hi_,
           std::array<Boundary, 3> b = {Boundary::open, Boundary::open, Boundary::open})
        : lo(lo_), hi(hi_), boundary(b) {
        for (int a = 0; a < 3; ++a)
            if (!(hi[a] > lo[a]))
                throw ConfigError("SimBox: upper bound must exceed lower bound on every axis");
    }

    double length(int axis) const { return hi[axis] - lo[axis]; }
    double volume() const { return length(0) * length(1) * length(2); }
    bool periodic(int axis) const { return boundary[axis] == Boundary::periodic; }
};

// b - a, wrapped to the nearest image on periodic axes. Components on a
// periodic axis land in [-L/2, L/2].
inline Vec3 displacement(const Vec3& a, const Vec3& b, const SimBox& box) {
    Vec3 d = b - a;
    for (int ax = 0; ax < 3; ++ax) {
        if (box.periodic(ax)) {
            const double L = box.length(ax);
            d[ax] -= L * std::round(d[ax] / L);
        }
    }
    return d;
}

} // namespace crackmd
