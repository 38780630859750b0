#pragma once

#include <cmath>
#include <initializer_list>

#include "ipent/linalg.hpp"
#include "ipent/rng.hpp"
#include "ipent/states.hpp"

namespace support {

using ipent::Complex;
using ipent::ComplexMatrix;
using ipent::ComplexVector;
using ipent::RealVector;

inline ComplexMatrix singlet_matrix() {
    ComplexMatrix c(2, 2);
    double s = 1.0 / std::sqrt(2.0);
    c << 0.0, s, -s, 0.0;
    return c;
}

inline ipent::TwoParticleState singlet_state() {
    return ipent::TwoParticleState::from_matrix(ipent::Statistics::Fermion, singlet_matrix());
}

inline ComplexVector basis_vector(Eigen::Index dim, Eigen::Index k) {
    ComplexVector v = ComplexVector::Zero(dim);
    v(k) = 1.0;
    return v;
}

/// Boson state already in Schmidt form: C = diag(b), sum b_i^2 = 1.
inline ipent::TwoParticleState boson_diagonal(std::initializer_list<double> b) {
    ComplexMatrix c = ComplexMatrix::Zero(static_cast<Eigen::Index>(b.size()),
                                          static_cast<Eigen::Index>(b.size()));
    Eigen::Index i = 0;
    for (double v : b) c(i, i) = v, ++i;
    return ipent::TwoParticleState::from_matrix(ipent::Statistics::Boson, c);
}

/// Fermion state already in Slater form: paired blocks with coefficients a,
/// sum a_i^2 = 1, standard basis.
inline ipent::TwoParticleState fermion_paired(Eigen::Index dim,
                                              std::initializer_list<double> a) {
    RealVector z(static_cast<Eigen::Index>(a.size()));
    Eigen::Index i = 0;
    for (double v : a) z(i) = v / std::sqrt(2.0), ++i;
    return ipent::TwoParticleState::from_matrix(ipent::Statistics::Fermion,
                                                ipent::youla_z_matrix(dim, z));
}

/// Deterministic d x d unitary harvested from a seeded Hermitian eigenbasis.
inline ipent::ComplexMatrix random_unitary(Eigen::Index dim, std::uint64_t seed) {
    ipent::GaussianSource rng(seed);
    ComplexMatrix g = rng.gaussian_matrix(dim, dim);
    ComplexMatrix h = 0.5 * (g + g.adjoint());
    return ipent::hermitian_eigen(h).eigenvectors.matrix();
}

inline ComplexMatrix random_symmetric_unit(Eigen::Index dim, std::uint64_t seed) {
    ipent::GaussianSource rng(seed);
    ComplexMatrix g = rng.gaussian_matrix(dim, dim);
    ComplexMatrix s = 0.5 * (g + g.transpose());
    return s / s.norm();
}

inline ComplexMatrix random_antisymmetric_unit(Eigen::Index dim, std::uint64_t seed) {
    ipent::GaussianSource rng(seed);
    ComplexMatrix g = rng.gaussian_matrix(dim, dim);
    ComplexMatrix a = 0.5 * (g - g.transpose());
    return a / a.norm();
}

// Frozen reference values, all recomputed by an independent script.
inline constexpr double kInvSqrt2 = 0.70710678118654746;
inline constexpr double kSqrt08 = 0.89442719099991586;
inline constexpr double kSqrt02 = 0.44721359549995793;
inline constexpr double kInvSqrt3 = 0.57735026918962584;
inline constexpr double kEntropy8020 = 0.72192809488736231;       // -0.8 lg 0.8 - 0.2 lg 0.2
inline constexpr double kEntropySlater9010 = 1.4689955935892813;  // 1 + H2(0.9)
inline constexpr double kEntropy9010 = 0.46899559358928133;       // H2(0.9)
inline constexpr double kLog2Three = 1.5849625007211561;
inline constexpr double kTwoOverSqrt6 = 0.81649658092772615;
inline constexpr double kOneOverSqrt6 = 0.40824829046386307;
inline constexpr double kUnequalPairOverlap = 1.0 / 3.0;  // (b1-b2)/(b1+b2) at b^2=(.8,.2)

}  // namespace support
