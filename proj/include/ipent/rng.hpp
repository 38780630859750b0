#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "ipent/linalg.hpp"

namespace ipent {

/// Seeded Gaussian source with a fixed Box-Muller implementation so streams are
/// reproducible across standard libraries, not just across runs.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // (0, 1]
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

    Complex complex_gaussian() {
        double re = gaussian();
        double im = gaussian();
        return {re, im};
    }

    ComplexVector unit_vector(Eigen::Index dim) {
        ComplexVector v(dim);
        for (Eigen::Index i = 0; i < dim; ++i) v(i) = complex_gaussian();
        double n = v.norm();
        while (n < 1e-12) {  // astronomically unlikely; retry keeps the contract exact
            for (Eigen::Index i = 0; i < dim; ++i) v(i) = complex_gaussian();
            n = v.norm();
        }
        return v / n;
    }

    ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
        ComplexMatrix m(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
        return m;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ipent
