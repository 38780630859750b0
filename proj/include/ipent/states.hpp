#pragma once

#include <cstdint>
#include <string>

#include "ipent/linalg.hpp"

namespace ipent {

enum class Statistics { Fermion, Boson };

std::string to_string(Statistics s);

/// Normalized single-particle amplitude vector, d >= 2.
class SingleParticleVector {
public:
    /// Validates unit norm (within 1e-10) and dimension.
    explicit SingleParticleVector(ComplexVector amplitudes);

    /// Normalizes an arbitrary nonzero vector first.
    static SingleParticleVector normalized(ComplexVector amplitudes);

    const ComplexVector& amplitudes() const { return a_; }
    Eigen::Index dim() const { return a_.size(); }

private:
    ComplexVector a_;
};

/// Pure state of two identical particles, held as its d x d coefficient matrix
/// C with |psi> = sum_ij C_ij |i>|j>. C is antisymmetric for fermions and
/// symmetric for bosons, unit Frobenius norm, global phase canonical (first
/// nonzero coefficient in row-major order is real positive).
class TwoParticleState {
public:
    /// Validates shape, exchange symmetry (entrywise within 1e-10) and norm
    /// (re-normalized when within 1e-6 of 1, rejected otherwise), then
    /// canonicalizes the global phase.
    static TwoParticleState from_matrix(Statistics statistics, const ComplexMatrix& c);

    Statistics statistics() const { return statistics_; }
    Eigen::Index dim() const { return c_.rows(); }
    const ComplexMatrix& coefficients() const { return c_; }

private:
    TwoParticleState(Statistics s, ComplexMatrix c) : statistics_(s), c_(std::move(c)) {}

    Statistics statistics_;
    ComplexMatrix c_;
};

/// Normalized antisymmetric combination of two single-particle states
/// (phi x chi - chi x phi). Rejects (nearly) parallel inputs.
TwoParticleState antisymmetrize(const SingleParticleVector& phi, const SingleParticleVector& chi);

/// Normalized symmetric combination (phi x chi + chi x phi); phi = chi gives
/// the product state phi x phi.
TwoParticleState symmetrize(const SingleParticleVector& phi, const SingleParticleVector& chi);

/// Seeded Gaussian random state of the requested statistics.
TwoParticleState random_state(Eigen::Index dim, Statistics statistics, std::uint64_t seed);

}  // namespace ipent
