#pragma once

#include <cstdint>

#include "ipent/states.hpp"

namespace ipent {

inline constexpr double kDefaultAttainTol = 1e-7;
inline constexpr int kDefaultRestarts = 32;

/// Rank-one single-particle projector P = |p><p|.
struct Projector {
    SingleParticleVector vector;
};

struct PropertyReport {
    double max_value;
    Projector argmax;
    bool attained;  // max_value >= 1 - tolerance
    int restarts_used;
    double tolerance;
};

/// Expectation of the both-particles-tested projector observable
/// P(x)(I-P) + (I-P)(x)P + P(x)P in the state: 2<p|rho|p> - |p^dag C conj(p)|^2,
/// clamped to [0, 1]. The quadratic term vanishes identically for fermions.
double ep_expectation(const TwoParticleState& psi, const Projector& p);

/// Deterministic search for the projector maximizing ep_expectation: exact
/// candidates (reduced-density eigenvectors, decomposition basis columns, the
/// desymmetrized pair directions for boson Schmidt number 2) plus projected
/// gradient ascent from seeded random starts.
PropertyReport find_property_projector(const TwoParticleState& psi,
                                       double tol = kDefaultAttainTol,
                                       int restarts = kDefaultRestarts,
                                       std::uint64_t seed = 20260814u);

}  // namespace ipent
