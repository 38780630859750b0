#include "ipent/decomp.hpp"

#include <cmath>

namespace ipent {

namespace {

void check_threshold(double eps) {
    if (!(eps >= 1e-12 && eps <= 1e-3))
        throw InvalidThreshold("counting threshold must lie in [1e-12, 1e-3]");
}

int count_above(const RealVector& v, double eps) {
    int n = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) > eps) ++n;
    return n;
}

}  // namespace

SlaterDecomposition slater_decompose(const TwoParticleState& psi, double eps) {
    check_threshold(eps);
    if (psi.statistics() != Statistics::Fermion)
        throw WrongStatistics("slater_decompose expects a fermion state");
    YoulaResult youla = youla_antisymmetric(psi.coefficients());
    RealVector a = std::sqrt(2.0) * youla.values;
    int number = count_above(a, eps);
    return {psi.dim(), std::move(youla.u), std::move(a), number, eps};
}

SchmidtDecomposition schmidt_decompose(const TwoParticleState& psi, double eps) {
    check_threshold(eps);
    if (psi.statistics() != Statistics::Boson)
        throw WrongStatistics("schmidt_decompose expects a boson state");
    TakagiResult tak = takagi(psi.coefficients());
    int number = count_above(tak.values, eps);
    return {psi.dim(), std::move(tak.u), std::move(tak.values), number, eps};
}

DistinguishableSchmidt schmidt_distinguishable(const ComplexMatrix& m, double eps) {
    check_threshold(eps);
    if (m.rows() != m.cols()) throw DimensionMismatch("coefficient matrix must be square");
    require_finite(m, "schmidt_distinguishable");
    if (std::abs(m.norm() - 1.0) > 1e-10)
        throw NotNormalized("schmidt_distinguishable expects a unit-norm matrix");
    SvdResult dec = svd(m);
    UnitaryMatrix right(dec.v.matrix().conjugate());
    int number = count_above(dec.singular_values, eps);
    return {m.rows(),          std::move(dec.u), std::move(right),
            std::move(dec.singular_values), number, eps};
}

TwoParticleState reconstruct(const SlaterDecomposition& dec) {
    const ComplexMatrix& u = dec.pair_basis.matrix();
    ComplexMatrix c = ComplexMatrix::Zero(dec.dim, dec.dim);
    for (Eigen::Index i = 0; i < dec.coefficients.size(); ++i) {
        double z = dec.coefficients(i) / std::sqrt(2.0);
        c += z * (u.col(2 * i) * u.col(2 * i + 1).transpose() -
                  u.col(2 * i + 1) * u.col(2 * i).transpose());
    }
    return TwoParticleState::from_matrix(Statistics::Fermion, c);
}

TwoParticleState reconstruct(const SchmidtDecomposition& dec) {
    const ComplexMatrix& u = dec.basis.matrix();
    ComplexMatrix c = ComplexMatrix::Zero(dec.dim, dec.dim);
    for (Eigen::Index i = 0; i < dec.coefficients.size(); ++i)
        c += dec.coefficients(i) * (u.col(i) * u.col(i).transpose());
    return TwoParticleState::from_matrix(Statistics::Boson, c);
}

}  // namespace ipent
