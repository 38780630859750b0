#include "ipent/states.hpp"

#include <cmath>

#include "ipent/rng.hpp"

namespace ipent {

std::string to_string(Statistics s) {
    return s == Statistics::Fermion ? "fermion" : "boson";
}

SingleParticleVector::SingleParticleVector(ComplexVector amplitudes) : a_(std::move(amplitudes)) {
    if (a_.size() < 2) throw DimensionTooSmall("single-particle vector needs dimension >= 2");
    require_finite(a_, "single-particle vector");
    if (std::abs(a_.norm() - 1.0) > 1e-10)
        throw NotNormalized("single-particle vector is not unit norm");
}

SingleParticleVector SingleParticleVector::normalized(ComplexVector amplitudes) {
    if (amplitudes.size() < 2)
        throw DimensionTooSmall("single-particle vector needs dimension >= 2");
    require_finite(amplitudes, "single-particle vector");
    double n = amplitudes.norm();
    if (n < 1e-12) throw NotNormalized("cannot normalize a zero vector");
    return SingleParticleVector(amplitudes / n);
}

namespace {

// Global phase gauge: first coefficient in row-major order with nonnegligible
// magnitude is made real positive.
void canonicalize_phase(ComplexMatrix& c) {
    double cutoff = 1e-12 * (1.0 + max_abs(c));
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
        for (Eigen::Index j = 0; j < c.cols(); ++j) {
            double mag = std::abs(c(i, j));
            if (mag > cutoff) {
                c *= std::conj(c(i, j)) / mag;
                return;
            }
        }
    }
}

}  // namespace

TwoParticleState TwoParticleState::from_matrix(Statistics statistics, const ComplexMatrix& c) {
    if (c.rows() != c.cols()) throw DimensionMismatch("coefficient matrix must be square");
    if (c.rows() < 2) throw DimensionTooSmall("coefficient matrix needs dimension >= 2");
    require_finite(c, "coefficient matrix");

    double scale = max_abs(c);
    double residual = statistics == Statistics::Fermion ? max_abs(c + c.transpose())
                                                        : max_abs(c - c.transpose());
    if (residual > 1e-10 * (1.0 + scale))
        throw WrongSymmetry(statistics == Statistics::Fermion
                                ? "fermion coefficients must be antisymmetric"
                                : "boson coefficients must be symmetric");

    double norm = c.norm();
    if (std::abs(norm - 1.0) > 1e-6)
        throw NotNormalized("coefficient matrix is not unit Frobenius norm");

    ComplexMatrix canonical = c / norm;
    canonicalize_phase(canonical);
    return TwoParticleState(statistics, std::move(canonical));
}

TwoParticleState antisymmetrize(const SingleParticleVector& phi,
                                const SingleParticleVector& chi) {
    if (phi.dim() != chi.dim())
        throw DimensionMismatch("antisymmetrize: vectors have different dimensions");
    Complex overlap = (phi.amplitudes().adjoint() * chi.amplitudes())(0);
    double w = std::abs(overlap);
    if (w > 1.0 - 1e-12)
        throw LinearlyDependent("antisymmetrize: vectors are (nearly) parallel");

    const ComplexVector& f = phi.amplitudes();
    const ComplexVector& x = chi.amplitudes();
    ComplexMatrix c = f * x.transpose() - x * f.transpose();
    c /= std::sqrt(2.0 * (1.0 - w * w));
    return TwoParticleState::from_matrix(Statistics::Fermion, c);
}

TwoParticleState symmetrize(const SingleParticleVector& phi, const SingleParticleVector& chi) {
    if (phi.dim() != chi.dim())
        throw DimensionMismatch("symmetrize: vectors have different dimensions");
    Complex overlap = (phi.amplitudes().adjoint() * chi.amplitudes())(0);
    double w = std::abs(overlap);

    const ComplexVector& f = phi.amplitudes();
    const ComplexVector& x = chi.amplitudes();
    ComplexMatrix c = f * x.transpose() + x * f.transpose();
    c /= std::sqrt(2.0 * (1.0 + w * w));
    return TwoParticleState::from_matrix(Statistics::Boson, c);
}

TwoParticleState random_state(Eigen::Index dim, Statistics statistics, std::uint64_t seed) {
    if (dim < 2) throw DimensionTooSmall("random_state needs dimension >= 2");
    GaussianSource rng(seed);
    ComplexMatrix g = rng.gaussian_matrix(dim, dim);
    ComplexMatrix c = statistics == Statistics::Fermion ? 0.5 * (g - g.transpose()).eval()
                                                        : 0.5 * (g + g.transpose()).eval();
    double n = c.norm();
    while (n < 1e-9) {  // essentially impossible, but keeps the contract total
        g = rng.gaussian_matrix(dim, dim);
        c = statistics == Statistics::Fermion ? 0.5 * (g - g.transpose()).eval()
                                              : 0.5 * (g + g.transpose()).eval();
        n = c.norm();
    }
    return TwoParticleState::from_matrix(statistics, c / n);
}

}  // namespace ipent
