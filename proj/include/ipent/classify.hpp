#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ipent/decomp.hpp"
#include "ipent/states.hpp"

namespace ipent {

enum class Verdict { NonEntangled, Entangled };

std::string to_string(Verdict v);

using FactorizingPair = std::pair<SingleParticleVector, SingleParticleVector>;

struct ClassificationReport {
    Statistics statistics;
    int number;      // Slater number (fermion) or Schmidt number (boson)
    double entropy;  // spectral von Neumann entropy of the reduced density operator
    Verdict verdict;
    std::string rule;  // e.g. "fermion-slater-1"; "-marginal" appended near thresholds
    std::optional<FactorizingPair> factorizing_pair;
    std::optional<double> overlap;  // |<phi|chi>| of the pair when present
};

/// Entanglement verdict for a two-identical-particle pure state. Redundant
/// criteria (coefficient counting, coefficient equality, entropy values) are
/// all evaluated; disagreement raises NumericalInconsistency.
ClassificationReport classify(const TwoParticleState& psi, double eps = kDefaultCountThreshold);

/// Recovers single-particle vectors whose (anti)symmetrization reproduces the
/// state: the Slater pair for fermions with Slater number 1, (u1, u1) for
/// boson Schmidt number 1, and the unique non-orthogonal pair for boson
/// Schmidt number 2. Absent otherwise.
std::optional<FactorizingPair> desymmetrize(const TwoParticleState& psi,
                                            double eps = kDefaultCountThreshold);

}  // namespace ipent
