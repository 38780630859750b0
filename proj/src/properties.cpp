#include "ipent/properties.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "ipent/analysis.hpp"
#include "ipent/classify.hpp"
#include "ipent/decomp.hpp"
#include "ipent/errors.hpp"
#include "ipent/rng.hpp"

namespace ipent {

namespace {

// <psi| P(x)(I-P) + (I-P)(x)P + P(x)P |psi> = 2<p|rho|p> - |p^dag C conj(p)|^2.
// The quadratic term is the both-particles amplitude <p,p|psi>; it vanishes
// identically for antisymmetric C.
double ep_value(const ComplexMatrix& c, const DensityOperator& rho,
                const ComplexVector& p, Statistics statistics) {
    const double linear = 2.0 * (p.adjoint() * rho.matrix() * p)(0).real();
    double quadratic = 0.0;
    if (statistics == Statistics::Boson) {
        const Complex g = (p.adjoint() * c * p.conjugate())(0);
        quadratic = std::norm(g);
    }
    return std::clamp(linear - quadratic, 0.0, 1.0);
}

// Riemannian gradient ascent on the unit sphere with backtracking step
// control. The objective's Wirtinger gradient in conj(p) is
// 2 rho p - 2 conj(g) (C conj(p)) with g = p^dag C conj(p); the fermion
// correction term is identically zero and skipped.
double ascend(const ComplexMatrix& c, const DensityOperator& rho,
              Statistics statistics, ComplexVector& p, int max_iters) {
    double value = ep_value(c, rho, p, statistics);
    double step = 0.5;
    for (int iter = 0; iter < max_iters; ++iter) {
        ComplexVector grad = rho.matrix() * p;
        if (statistics == Statistics::Boson) {
            const Complex g = (p.adjoint() * c * p.conjugate())(0);
            grad -= std::conj(g) * (c * p.conjugate());
        }
        ComplexVector tangent = grad - p * p.dot(grad);
        if (tangent.norm() < 1e-13) break;

        bool moved = false;
        while (step > 1e-12) {
            ComplexVector trial = p + step * tangent;
            trial.normalize();
            const double trial_value = ep_value(c, rho, trial, statistics);
            if (trial_value > value + 1e-16) {
                p = std::move(trial);
                value = trial_value;
                step = std::min(step * 2.0, 4.0);
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
        if (value >= 1.0 - 1e-12) break;
    }
    return value;
}

}  // namespace

double ep_expectation(const TwoParticleState& psi, const Projector& p) {
    if (p.vector.dim() != psi.dim()) {
        throw DimensionMismatch(
            "projector dimension does not match the state dimension");
    }
    const DensityOperator rho = reduced_density(psi);
    return ep_value(psi.coefficients(), rho, p.vector.amplitudes(),
                    psi.statistics());
}

PropertyReport find_property_projector(const TwoParticleState& psi, double tol,
                                       int restarts, std::uint64_t seed) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw InvalidThreshold("attainment tolerance must be positive");
    }
    if (restarts < 0) {
        throw InvalidThreshold("restart count must be non-negative");
    }
    const Eigen::Index d = psi.dim();
    const ComplexMatrix& c = psi.coefficients();
    const DensityOperator rho = reduced_density(psi);

    std::vector<ComplexVector> candidates;
    const HermitianEigen spectral = hermitian_eigen(rho.matrix());
    for (Eigen::Index k = 0; k < d; ++k) {
        candidates.push_back(spectral.eigenvectors.column(k));
    }
    if (psi.statistics() == Statistics::Fermion) {
        const SlaterDecomposition dec = slater_decompose(psi);
        for (Eigen::Index k = 0; k < d; ++k) {
            candidates.push_back(dec.pair_basis.column(k));
        }
    } else {
        const SchmidtDecomposition dec = schmidt_decompose(psi);
        for (Eigen::Index k = 0; k < d; ++k) {
            candidates.push_back(dec.basis.column(k));
        }
        if (dec.schmidt_number == 2) {
            // The pair whose symmetrization reproduces the state; the
            // objective reaches its supremum exactly at these directions.
            if (auto pair = desymmetrize(psi)) {
                candidates.push_back(pair->first.amplitudes());
                candidates.push_back(pair->second.amplitudes());
            }
        }
    }

    double best = -1.0;
    ComplexVector best_p;
    for (const ComplexVector& cand : candidates) {
        ComplexVector p = cand;
        const double value = ascend(c, rho, psi.statistics(), p, 200);
        if (value > best) {
            best = value;
            best_p = std::move(p);
        }
    }

    GaussianSource source(seed);
    int used = 0;
    for (int r = 0; r < restarts; ++r) {
        if (best >= 1.0 - 1e-12) break;
        ComplexVector p = source.unit_vector(d);
        const double value = ascend(c, rho, psi.statistics(), p, 200);
        if (value > best) {
            best = value;
            best_p = std::move(p);
        }
        ++used;
    }

    best = std::clamp(best, 0.0, 1.0);
    return PropertyReport{best,
                          Projector{SingleParticleVector::normalized(best_p)},
                          best >= 1.0 - tol, used, tol};
}

}  // namespace ipent
