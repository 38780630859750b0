#include "ipent/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>

#include "ipent/errors.hpp"
#include "ipent/rng.hpp"

namespace ipent::oracle {

namespace {

constexpr double kReconstructionTol = 1e-9;
constexpr double kEntropyFloor = 1e-12;

ComplexVector flatten(const ComplexMatrix& c) {
    const Eigen::Index d = c.rows();
    ComplexVector psi(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            psi(i * d + j) = c(i, j);
        }
    }
    return psi;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index ar = a.rows(), ac = a.cols();
    const Eigen::Index br = b.rows(), bc = b.cols();
    ComplexMatrix out(ar * br, ac * bc);
    for (Eigen::Index i = 0; i < ar; ++i) {
        for (Eigen::Index j = 0; j < ac; ++j) {
            for (Eigen::Index k = 0; k < br; ++k) {
                for (Eigen::Index l = 0; l < bc; ++l) {
                    out(i * br + k, j * bc + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

// Partial trace over the second slot, by index summation straight from the
// coefficient matrix: rho_ab = sum_j C_aj conj(C_bj).
ComplexMatrix traced_rho_slot1(const ComplexMatrix& c) {
    const Eigen::Index d = c.rows();
    ComplexMatrix rho = ComplexMatrix::Zero(d, d);
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) {
            Complex sum = 0.0;
            for (Eigen::Index j = 0; j < d; ++j) {
                sum += c(a, j) * std::conj(c(b, j));
            }
            rho(a, b) = sum;
        }
    }
    return rho;
}

ComplexMatrix traced_rho_slot2(const ComplexMatrix& c) {
    const Eigen::Index d = c.rows();
    ComplexMatrix rho = ComplexMatrix::Zero(d, d);
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) {
            Complex sum = 0.0;
            for (Eigen::Index i = 0; i < d; ++i) {
                sum += c(i, a) * std::conj(c(i, b));
            }
            rho(a, b) = sum;
        }
    }
    return rho;
}

}  // namespace

double brute_entropy(const TwoParticleState& psi) {
    const Eigen::Index d = psi.dim();
    if (d > 16) {
        throw DimensionTooLarge(
            "brute-force density operator limited to dimension 16");
    }
    const ComplexVector vec = flatten(psi.coefficients());
    const ComplexMatrix density = vec * vec.adjoint();

    // rho_ab = sum_j <a j| D |b j>
    ComplexMatrix rho = ComplexMatrix::Zero(d, d);
    for (Eigen::Index a = 0; a < d; ++a) {
        for (Eigen::Index b = 0; b < d; ++b) {
            Complex sum = 0.0;
            for (Eigen::Index j = 0; j < d; ++j) {
                sum += density(a * d + j, b * d + j);
            }
            rho(a, b) = sum;
        }
    }

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho);
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("eigensolver failed on the brute reduced density");
    }
    double entropy = 0.0;
    for (Eigen::Index k = 0; k < d; ++k) {
        const double lambda = solver.eigenvalues()(k);
        if (lambda > kEntropyFloor) {
            entropy -= lambda * std::log2(lambda);
        }
    }
    return entropy;
}

double ep_expectation_brute(const TwoParticleState& psi, const ComplexVector& p) {
    if (p.size() != psi.dim()) {
        throw DimensionMismatch(
            "projector dimension does not match the state dimension");
    }
    const Eigen::Index d = psi.dim();
    const ComplexMatrix proj = p * p.adjoint();
    const ComplexMatrix rest = ComplexMatrix::Identity(d, d) - proj;
    const ComplexMatrix op =
        kron(proj, rest) + kron(rest, proj) + kron(proj, proj);
    const ComplexVector vec = flatten(psi.coefficients());
    return (vec.adjoint() * op * vec)(0).real();
}

double brute_max_ep(const TwoParticleState& psi, int samples, std::uint64_t seed) {
    const Eigen::Index d = psi.dim();
    const ComplexMatrix rho = traced_rho_slot1(psi.coefficients());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho);
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("eigensolver failed on the brute reduced density");
    }

    double best = 0.0;
    for (Eigen::Index k = 0; k < d; ++k) {
        ComplexVector p = solver.eigenvectors().col(k);
        best = std::max(best, ep_expectation_brute(psi, p));
    }
    GaussianSource source(seed);
    for (int s = 0; s < samples; ++s) {
        best = std::max(best, ep_expectation_brute(psi, source.unit_vector(d)));
    }
    return best;
}

ComplexMatrix reassemble(Statistics statistics, const ComplexMatrix& basis,
                         const RealVector& coefficients) {
    const Eigen::Index d = basis.rows();
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    if (statistics == Statistics::Boson) {
        for (Eigen::Index i = 0; i < coefficients.size(); ++i) {
            const ComplexVector u = basis.col(i);
            out += coefficients(i) * (u * u.transpose());
        }
    } else {
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (Eigen::Index k = 0; k < coefficients.size(); ++k) {
            const ComplexVector u = basis.col(2 * k);
            const ComplexVector v = basis.col(2 * k + 1);
            out += coefficients(k) * inv_sqrt2 *
                   (u * v.transpose() - v * u.transpose());
        }
    }
    return out;
}

double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    // min over phi of |a - e^{i phi} b|_F, attained at phi = -arg<a,b>.
    // Computed entrywise after rotating b; the textbook
    // sqrt(|a|^2 + |b|^2 - 2|<a,b>|) form cancels O(1) terms and cannot
    // resolve distances below sqrt(machine epsilon).
    const Complex overlap = (a.conjugate().cwiseProduct(b)).sum();
    const double mag = std::abs(overlap);
    const Complex factor = mag > 1e-300 ? std::conj(overlap) / mag : Complex(1.0);
    return (a - factor * b).norm();
}

VerificationOutcome reconstruction_check(const TwoParticleState& psi, double eps) {
    ComplexMatrix rebuilt;
    if (psi.statistics() == Statistics::Fermion) {
        const SlaterDecomposition dec = slater_decompose(psi, eps);
        rebuilt = reassemble(Statistics::Fermion, dec.pair_basis.matrix(),
                             dec.coefficients);
    } else {
        const SchmidtDecomposition dec = schmidt_decompose(psi, eps);
        rebuilt = reassemble(Statistics::Boson, dec.basis.matrix(),
                             dec.coefficients);
    }
    const double err = phase_aligned_distance(psi.coefficients(), rebuilt);
    return VerificationOutcome{"reconstruction", err <= kReconstructionTol, err,
                               kReconstructionTol};
}

double slot_trace_mismatch(const TwoParticleState& psi) {
    const ComplexMatrix one = traced_rho_slot1(psi.coefficients());
    const ComplexMatrix two = traced_rho_slot2(psi.coefficients());
    return (one - two).cwiseAbs().maxCoeff();
}

}  // namespace ipent::oracle
