#pragma once

#include "ipent/linalg.hpp"
#include "ipent/states.hpp"

namespace ipent {

inline constexpr double kDefaultCountThreshold = 1e-9;

/// Fermion normal form: C = sum_i (a_i/sqrt2) (u_{2i} u_{2i+1}^T - u_{2i+1} u_{2i}^T)
/// with sum a_i^2 = 1 and the pair basis columns orthonormal.
struct SlaterDecomposition {
    Eigen::Index dim;
    UnitaryMatrix pair_basis;
    RealVector coefficients;  // a, descending, floor(d/2) entries
    int slater_number;
    double threshold;
};

/// Boson normal form: C = sum_i b_i u_i u_i^T with sum b_i^2 = 1.
struct SchmidtDecomposition {
    Eigen::Index dim;
    UnitaryMatrix basis;
    RealVector coefficients;  // b, descending, d entries
    int schmidt_number;
    double threshold;
};

/// Distinguishable-particle normal form C = sum_k sigma_k u_k r_k^T with two
/// orthonormal bases (r = conj of the right singular basis).
struct DistinguishableSchmidt {
    Eigen::Index dim;
    UnitaryMatrix left_basis;
    UnitaryMatrix right_basis;
    RealVector coefficients;  // sigma, descending
    int schmidt_number;
    double threshold;
};

/// Slater decomposition of a fermion state; eps is the coefficient counting
/// threshold, valid range [1e-12, 1e-3].
SlaterDecomposition slater_decompose(const TwoParticleState& psi,
                                     double eps = kDefaultCountThreshold);

/// Schmidt decomposition of a boson state.
SchmidtDecomposition schmidt_decompose(const TwoParticleState& psi,
                                       double eps = kDefaultCountThreshold);

/// Schmidt decomposition of an arbitrary unit-norm coefficient matrix, the two
/// particles treated as distinguishable.
DistinguishableSchmidt schmidt_distinguishable(const ComplexMatrix& m,
                                               double eps = kDefaultCountThreshold);

TwoParticleState reconstruct(const SlaterDecomposition& dec);
TwoParticleState reconstruct(const SchmidtDecomposition& dec);

}  // namespace ipent
