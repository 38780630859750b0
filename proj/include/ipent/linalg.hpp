#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ipent/errors.hpp"

namespace ipent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Unitarity acceptance: ||U^dag U - I||_inf (entrywise max) must stay below this.
inline constexpr double kUnitaryTol = 1e-10;

// Entrywise max-abs norm used by all symmetry/hermiticity residual checks.
double max_abs(const ComplexMatrix& m);

void require_finite(const ComplexMatrix& m, const char* where);

/// Square matrix validated as unitary on construction.
class UnitaryMatrix {
public:
    explicit UnitaryMatrix(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }
    ComplexVector column(Eigen::Index k) const { return m_.col(k); }

private:
    ComplexMatrix m_;
};

struct HermitianEigen {
    RealVector eigenvalues;       // ascending
    UnitaryMatrix eigenvectors;   // columns, canonical phases
};

struct SvdResult {
    UnitaryMatrix u;
    RealVector singular_values;   // descending, >= 0
    UnitaryMatrix v;              // M = U diag(sigma) V^dag
};

struct TakagiResult {
    UnitaryMatrix u;
    RealVector values;            // descending, >= 0; S = U diag(b) U^T
};

struct YoulaResult {
    UnitaryMatrix u;
    RealVector values;            // floor(d/2) block coefficients, descending; A = U Z U^T
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending,
/// eigenvector phases and degenerate-cluster ordering made deterministic.
HermitianEigen hermitian_eigen(const ComplexMatrix& h);

/// Full singular value decomposition M = U diag(sigma) V^dag with
/// deterministic phases (U column phases fixed, V compensated).
SvdResult svd(const ComplexMatrix& m);

/// Takagi factorization of a complex symmetric matrix: S = U diag(b) U^T,
/// b real nonnegative descending, U unitary.
TakagiResult takagi(const ComplexMatrix& s);

/// Youla canonical form of a complex antisymmetric matrix: A = U Z U^T where
/// Z is block diagonal with blocks z_i * [[0,1],[-1,0]] (z_i descending) and a
/// trailing zero row/column when the dimension is odd.
YoulaResult youla_antisymmetric(const ComplexMatrix& a);

/// Z matrix assembled from Youla block coefficients.
ComplexMatrix youla_z_matrix(Eigen::Index dim, const RealVector& z);

}  // namespace ipent
