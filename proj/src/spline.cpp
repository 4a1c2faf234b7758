#include "crackmd/spline.hpp"

#include "crackmd/error.hpp"

namespace crackmd {

Spline1D::Spline1D(double spacing, const std::vector<double>& values)
    : h_(spacing), inv_h_(1.0 / spacing), n_(values.size()) {
    if (!(spacing > 0.0)) throw ConfigError("spline: knot spacing must be > 0");
    if (n_ < 2) throw ConfigError("spline: need at least 2 knots");

    // Second derivatives M_k from the natural-boundary tridiagonal system
    // M_{k-1} + 4 M_k + M_{k+1} = 6 (y_{k-1} - 2 y_k + y_{k+1}) / h^2.
    const std::size_t n = n_;
    std::vector<double> m(n, 0.0);
    if (n > 2) {
        std::vector<double> diag(n, 0.0), rhs(n, 0.0);
        diag[1] = 4.0;
        rhs[1] = 6.0 * (values[0] - 2.0 * values[1] + values[2]) * inv_h_ * inv_h_;
        for (std::size_t k = 2; k + 1 < n; ++k) {
            const double w = 1.0 / diag[k - 1];
            diag[k] = 4.0 - w;
            rhs[k] = 6.0 * (values[k - 1] - 2.0 * values[k] + values[k + 1]) * inv_h_ * inv_h_ -
                     w * rhs[k - 1];
        }
        for (std::size_t k = n - 2; k >= 1; --k) {
            m[k] = (rhs[k] - m[k + 1]) / diag[k];
            if (k == 1) break;
        }
    }

    coef_.assign(4 * (n - 1) + 4, 0.0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        double* c = coef_.data() + 4 * k;
        c[0] = values[k];
        c[1] = (values[k + 1] - values[k]) * inv_h_ - h_ * (2.0 * m[k] + m[k + 1]) / 6.0;
        c[2] = 0.5 * m[k];
        c[3] = (m[k + 1] - m[k]) / (6.0 * h_);
    }
    // Trailing entry keeps value() exact if anyone indexes the final knot
    // through the clamped segment; not used directly.
    coef_[4 * (n - 1)] = values[n - 1];
}

} // namespace crackmd
