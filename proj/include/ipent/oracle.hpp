#pragma once

#include <cstdint>
#include <string>

#include "ipent/decomp.hpp"
#include "ipent/states.hpp"

namespace ipent::oracle {

/// Brute-force verifiers. Each one recomputes its target quantity from the
/// raw coefficient matrix without calling the fast implementation it checks:
/// full d^2 x d^2 density operators, explicit index-summation partial traces,
/// explicit Kronecker products, and Eigen's solver invoked directly.

struct VerificationOutcome {
    std::string check_name;
    bool passed;  // measured_error <= tolerance
    double measured_error;
    double tolerance;
};

/// Base-2 von Neumann entropy from the full d^2 x d^2 pure density operator
/// and an explicit partial trace over the second slot. Refuses d > 16.
double brute_entropy(const TwoParticleState& psi);

/// <psi| P(x)(I-P) + (I-P)(x)P + P(x)P |psi> evaluated by assembling the
/// d^2 x d^2 operator entrywise. p must be a unit vector.
double ep_expectation_brute(const TwoParticleState& psi, const ComplexVector& p);

/// Empirical maximum of the projector functional over `samples` uniform
/// random unit vectors plus the eigenvectors of the brute reduced density
/// operator. Deterministic per seed; lower-bounds the supremum.
double brute_max_ep(const TwoParticleState& psi, int samples, std::uint64_t seed);

/// Decomposes per statistics, reassembles the coefficient matrix locally from
/// the returned basis and coefficients, and reports the global-phase-aligned
/// Frobenius distance against the input. Tolerance 1e-9.
VerificationOutcome reconstruction_check(const TwoParticleState& psi,
                                         double eps = kDefaultCountThreshold);

/// Local reassembly used by reconstruction_check: sum of b_i u_i u_i^T
/// (boson) or (a_k/sqrt(2)) (u_{2k} u_{2k+1}^T - u_{2k+1} u_{2k}^T) (fermion).
ComplexMatrix reassemble(Statistics statistics, const ComplexMatrix& basis,
                         const RealVector& coefficients);

/// Frobenius distance minimized over a global phase: B is rotated by the
/// phase of <A,B>_F before subtraction, which stays accurate down to
/// machine-precision distances.
double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-abs difference between the partial traces over the two slots, both
/// computed by explicit index summation.
double slot_trace_mismatch(const TwoParticleState& psi);

}  // namespace ipent::oracle
