#pragma once

namespace crackmd {

// Neumaier compensated accumulator; keeps global energy sums independent of
// benign reassociation differences between runs.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

} // namespace crackmd
