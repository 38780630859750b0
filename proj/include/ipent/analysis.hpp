#pragma once

#include "ipent/linalg.hpp"
#include "ipent/states.hpp"

namespace ipent {

/// One-particle reduced density operator: Hermitian, unit trace, positive
/// semidefinite within tolerance.
class DensityOperator {
public:
    explicit DensityOperator(ComplexMatrix rho);

    const ComplexMatrix& matrix() const { return rho_; }
    Eigen::Index dim() const { return rho_.rows(); }

private:
    ComplexMatrix rho_;
};

/// rho = C C^dag. The partial traces over either particle slot coincide for
/// exchange-(anti)symmetric coefficients; this is asserted within 1e-12.
DensityOperator reduced_density(const TwoParticleState& psi);

/// Base-2 von Neumann entropy -sum lambda log2 lambda, eigenvalues below 1e-12
/// treated as exact zeros, result clamped to [0, log2 d].
double von_neumann_entropy(const DensityOperator& rho);

/// Closed form for fermions: S = 1 - sum a_i^2 log2 a_i^2 over Slater
/// coefficients with sum a_i^2 = 1.
double entropy_from_slater(const RealVector& a);

/// Closed form for bosons: S = -sum b_i^2 log2 b_i^2 over Schmidt coefficients
/// with sum b_i^2 = 1.
double entropy_from_schmidt(const RealVector& b);

}  // namespace ipent
