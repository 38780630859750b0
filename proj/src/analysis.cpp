#include "ipent/analysis.hpp"

#include <cmath>

namespace ipent {

namespace {

constexpr double kEigenvalueFloor = 1e-12;

double check_probability_vector(const RealVector& v, const char* what) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v(i)) || v(i) < 0.0)
            throw NotNormalized(std::string(what) + ": coefficients must be nonnegative");
        sum += v(i) * v(i);
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw NotNormalized(std::string(what) + ": squared coefficients must sum to 1");
    return sum;
}

}  // namespace

DensityOperator::DensityOperator(ComplexMatrix rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols()) throw DimensionMismatch("density operator must be square");
    require_finite(rho_, "density operator");
    if (max_abs(rho_ - rho_.adjoint()) > 1e-10)
        throw NotHermitian("density operator must be Hermitian");
    if (std::abs(rho_.trace().real() - 1.0) > 1e-10 || std::abs(rho_.trace().imag()) > 1e-10)
        throw NotNormalized("density operator must have unit trace");
}

DensityOperator reduced_density(const TwoParticleState& psi) {
    const ComplexMatrix& c = psi.coefficients();
    ComplexMatrix slot1 = c * c.adjoint();             // trace over the second slot
    ComplexMatrix slot2 = c.transpose() * c.conjugate();  // trace over the first slot
    if (max_abs(slot1 - slot2) > 1e-12)
        throw NumericalInconsistency("partial traces over the two slots disagree");
    return DensityOperator(0.5 * (slot1 + slot1.adjoint()));
}

double von_neumann_entropy(const DensityOperator& rho) {
    HermitianEigen eig = hermitian_eigen(rho.matrix());
    double s = 0.0;
    for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
        double lambda = eig.eigenvalues(i);
        if (lambda < -1e-10)
            throw NumericalInconsistency("density operator has a negative eigenvalue");
        if (lambda > kEigenvalueFloor) s -= lambda * std::log2(lambda);
    }
    double cap = std::log2(static_cast<double>(rho.dim()));
    return std::min(std::max(s, 0.0), cap);
}

double entropy_from_slater(const RealVector& a) {
    check_probability_vector(a, "entropy_from_slater");
    double s = 1.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        double p = a(i) * a(i);
        if (p > kEigenvalueFloor) s -= p * std::log2(p);
    }
    return s;
}

double entropy_from_schmidt(const RealVector& b) {
    check_probability_vector(b, "entropy_from_schmidt");
    double s = 0.0;
    for (Eigen::Index i = 0; i < b.size(); ++i) {
        double p = b(i) * b(i);
        if (p > kEigenvalueFloor) s -= p * std::log2(p);
    }
    return std::max(s, 0.0);
}

}  // namespace ipent
