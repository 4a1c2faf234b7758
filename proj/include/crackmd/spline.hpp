#pragma once

#include <cstddef>
#include <vector>

namespace crackmd {

// Natural cubic spline on a uniform grid x_k = k*h, built once from
// tabulated values. Evaluation returns the exact table value at every knot;
// value and first derivative are continuous across knots. Queries outside
// the grid evaluate the clamped end segment's polynomial. Evaluation is
// stateless and safe to call from any number of threads.
class Spline1D {
public:
    Spline1D() = default;
    Spline1D(double spacing, const std::vector<double>& values);

    double value(double x) const {
        double t;
        const double* c = seg(x, t);
        return ((c[3] * t + c[2]) * t + c[1]) * t + c[0];
    }

    double derivative(double x) const {
        double t;
        const double* c = seg(x, t);
        return (3.0 * c[3] * t + 2.0 * c[2]) * t + c[1];
    }

    void value_and_derivative(double x, double& v, double& d) const {
        double t;
        const double* c = seg(x, t);
        v = ((c[3] * t + c[2]) * t + c[1]) * t + c[0];
        d = (3.0 * c[3] * t + 2.0 * c[2]) * t + c[1];
    }

    double spacing() const { return h_; }
    std::size_t knots() const { return n_; }
    double last_knot() const { return h_ * static_cast<double>(n_ - 1); }

private:
    // Segment coefficients [y, b, c, d] per segment.
    const double* seg(double x, double& t) const {
        double u = x * inv_h_;
        auto k = static_cast<std::ptrdiff_t>(u);
        if (k < 0) k = 0;
        const auto kmax = static_cast<std::ptrdiff_t>(n_) - 2;
        if (k > kmax) k = kmax;
        t = x - static_cast<double>(k) * h_;
        return coef_.data() + 4 * k;
    }

    double h_ = 1.0;
    double inv_h_ = 1.0;
    std::size_t n_ = 0;
    std::vector<double> coef_;
};

} // namespace crackmd
