#include "ipent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ipent {

double max_abs(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

void require_finite(const ComplexMatrix& m, const char* where) {
    if (!m.allFinite()) throw NonFinite(std::string(where) + ": non-finite entries");
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("unitary matrix must be square");
    require_finite(m_, "unitary matrix");
    ComplexMatrix gram = m_.adjoint() * m_;
    gram.diagonal().array() -= 1.0;
    if (max_abs(gram) >= kUnitaryTol)
        throw NumericalInconsistency("matrix failed the unitarity check");
}

namespace {

Eigen::Index largest_abs_index(const ComplexVector& v) {
    Eigen::Index best = 0;
    double best_mag = std::abs(v(0));
    for (Eigen::Index i = 1; i < v.size(); ++i) {
        double mag = std::abs(v(i));
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    return best;
}

// Multiply the column by a unit scalar so its largest-magnitude entry is real positive.
// Returns the factor applied.
Complex fix_phase(Eigen::Ref<ComplexVector> v) {
    Complex e = v(largest_abs_index(v));
    double mag = std::abs(e);
    if (mag == 0.0) return 1.0;
    Complex factor = std::conj(e) / mag;
    v *= factor;
    return factor;
}

// Sign-only canonicalization (the gauge available to Takagi columns): make the
// largest-magnitude entry have positive real part, or positive imaginary part
// when the real part is negligible.
void fix_sign(Eigen::Ref<ComplexVector> v) {
    Complex e = v(largest_abs_index(v));
    double mag = std::abs(e);
    if (mag == 0.0) return;
    bool flip = std::abs(e.real()) > 1e-12 * mag ? e.real() < 0.0 : e.imag() < 0.0;
    if (flip) v = -v;
}

// Deterministic ordering key for columns inside a degenerate cluster: descending
// magnitude of the first nonzero coordinate, then its index, then full
// lexicographic comparison.
bool column_precedes(const ComplexVector& a, const ComplexVector& b) {
    constexpr double kNz = 1e-9;
    auto first_nonzero = [](const ComplexVector& v) {
        for (Eigen::Index i = 0; i < v.size(); ++i)
            if (std::abs(v(i)) > kNz) return i;
        return v.size();
    };
    Eigen::Index ia = first_nonzero(a), ib = first_nonzero(b);
    double ma = ia < a.size() ? std::abs(a(ia)) : 0.0;
    double mb = ib < b.size() ? std::abs(b(ib)) : 0.0;
    if (std::abs(ma - mb) > 1e-12) return ma > mb;
    if (ia != ib) return ia < ib;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (std::abs(a(i).real() - b(i).real()) > 1e-12) return a(i).real() > b(i).real();
        if (std::abs(a(i).imag() - b(i).imag()) > 1e-12) return a(i).imag() > b(i).imag();
    }
    return false;
}

// Subtract from v its projection onto the first `count` columns of acc, twice
// for numerical safety.
void project_out(ComplexVector& v, const ComplexMatrix& acc, Eigen::Index count) {
    if (count == 0) return;
    auto basis = acc.leftCols(count);
    v -= basis * (basis.adjoint() * v);
    v -= basis * (basis.adjoint() * v);
}

// Coordinate-vector seed inside span(cluster) orthogonal to the accepted
// columns; deterministic (scores descending, ties broken by lowest index).
// `skip` selects the next-best seed when a previous attempt degenerated.
ComplexVector pick_seed(const ComplexMatrix& cluster, const ComplexMatrix& acc,
                        Eigen::Index acc_count, int skip) {
    const Eigen::Index d = cluster.rows();
    std::vector<std::pair<double, Eigen::Index>> scored(d);
    for (Eigen::Index j = 0; j < d; ++j) {
        ComplexVector s = cluster * cluster.adjoint().col(j);
        project_out(s, acc, acc_count);
        scored[j] = {s.norm(), j};
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    Eigen::Index rank = std::min<Eigen::Index>(skip, d - 1);
    if (scored[rank].first < 1e-8) throw NoConvergence("could not seed a cluster subspace");
    ComplexVector s = cluster * cluster.adjoint().col(scored[rank].second);
    project_out(s, acc, acc_count);
    return s / s.norm();
}

// Orthonormal, phase-canonical basis of the orthogonal complement of the
// accepted columns, written into acc starting at acc_count.
void fill_complement(ComplexMatrix& acc, Eigen::Index& acc_count, Eigen::Index needed) {
    const Eigen::Index d = acc.rows();
    for (Eigen::Index j = 0; j < d && needed > 0; ++j) {
        ComplexVector v = ComplexVector::Zero(d);
        v(j) = 1.0;
        project_out(v, acc, acc_count);
        double n = v.norm();
        if (n < 1e-6) continue;
        v /= n;
        fix_phase(v);
        acc.col(acc_count++) = v;
        --needed;
    }
    if (needed > 0) throw NoConvergence("complement basis construction failed");
}

struct Cluster {
    Eigen::Index first;  // first singular-value index
    Eigen::Index size;
};

std::vector<Cluster> cluster_values(const RealVector& sigma, Eigen::Index nonzero,
                                    double chain_tol) {
    std::vector<Cluster> out;
    Eigen::Index i = 0;
    while (i < nonzero) {
        Eigen::Index j = i + 1;
        while (j < nonzero && sigma(j - 1) - sigma(j) <= chain_tol) ++j;
        out.push_back({i, j - i});
        i = j;
    }
    return out;
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw DimensionMismatch("hermitian_eigen: matrix must be square");
    require_finite(h, "hermitian_eigen");
    double scale = max_abs(h);
    if (max_abs(h - h.adjoint()) > 1e-10 * (1.0 + scale))
        throw NotHermitian("hermitian_eigen: matrix is not Hermitian");

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (h + h.adjoint()));
    if (solver.info() != Eigen::Success)
        throw NoConvergence("hermitian_eigen: eigensolver failed to converge");

    RealVector lambda = solver.eigenvalues();
    ComplexMatrix vecs = solver.eigenvectors();
    const Eigen::Index d = lambda.size();
    for (Eigen::Index k = 0; k < d; ++k) fix_phase(vecs.col(k));

    // Deterministic ordering inside degenerate clusters.
    double ctol = 1e-12 * (1.0 + lambda.cwiseAbs().maxCoeff());
    Eigen::Index i = 0;
    while (i < d) {
        Eigen::Index j = i + 1;
        while (j < d && lambda(j) - lambda(j - 1) <= ctol) ++j;
        if (j - i > 1) {
            std::vector<Eigen::Index> idx(j - i);
            for (Eigen::Index k = 0; k < j - i; ++k) idx[k] = i + k;
            std::sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
                return column_precedes(vecs.col(a), vecs.col(b));
            });
            ComplexMatrix block(d, j - i);
            for (Eigen::Index k = 0; k < j - i; ++k) block.col(k) = vecs.col(idx[k]);
            vecs.middleCols(i, j - i) = block;
        }
        i = j;
    }
    return {std::move(lambda), UnitaryMatrix(std::move(vecs))};
}

SvdResult svd(const ComplexMatrix& m) {
    require_finite(m, "svd");
    Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (solver.info() != Eigen::Success) throw NoConvergence("svd failed to converge");

    ComplexMatrix u = solver.matrixU();
    ComplexMatrix v = solver.matrixV();
    RealVector sigma = solver.singularValues();
    const Eigen::Index r = std::min(u.cols(), v.cols());

    // Phase-fix the U columns and rotate the matching V columns by the same
    // factor so U diag(sigma) V^dag is unchanged.
    for (Eigen::Index k = 0; k < r; ++k) {
        Complex f = fix_phase(u.col(k));
        v.col(k) *= f;
    }
    for (Eigen::Index k = r; k < u.cols(); ++k) fix_phase(u.col(k));
    for (Eigen::Index k = r; k < v.cols(); ++k) fix_phase(v.col(k));

    // Reorder degenerate singular value clusters deterministically (columns of
    // U and V move together).
    double ctol = sigma.size() > 0 ? 1e-12 * (1.0 + sigma(0)) : 0.0;
    Eigen::Index i = 0;
    while (i < r) {
        Eigen::Index j = i + 1;
        while (j < r && sigma(j - 1) - sigma(j) <= ctol) ++j;
        if (j - i > 1) {
            std::vector<Eigen::Index> idx(j - i);
            for (Eigen::Index k = 0; k < j - i; ++k) idx[k] = i + k;
            std::sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
                return column_precedes(u.col(a), u.col(b));
            });
            ComplexMatrix ub(u.rows(), j - i), vb(v.rows(), j - i);
            for (Eigen::Index k = 0; k < j - i; ++k) {
                ub.col(k) = u.col(idx[k]);
                vb.col(k) = v.col(idx[k]);
            }
            u.middleCols(i, j - i) = ub;
            v.middleCols(i, j - i) = vb;
        }
        i = j;
    }
    return {UnitaryMatrix(std::move(u)), std::move(sigma), UnitaryMatrix(std::move(v))};
}

TakagiResult takagi(const ComplexMatrix& s_in) {
    if (s_in.rows() != s_in.cols()) throw DimensionMismatch("takagi: matrix must be square");
    require_finite(s_in, "takagi");
    double scale = max_abs(s_in);
    if (max_abs(s_in - s_in.transpose()) > 1e-10 * (1.0 + scale))
        throw NotSymmetric("takagi: matrix is not complex symmetric");

    const Eigen::Index d = s_in.rows();
    ComplexMatrix s = 0.5 * (s_in + s_in.transpose());

    Eigen::JacobiSVD<ComplexMatrix> solver(s, Eigen::ComputeFullU);
    if (solver.info() != Eigen::Success) throw NoConvergence("takagi: svd failed to converge");
    RealVector sigma = solver.singularValues();
    const ComplexMatrix& w = solver.matrixU();

    double sig0 = sigma.size() > 0 ? sigma(0) : 0.0;
    double zero_tol = 1e-12 * (1.0 + sig0);
    Eigen::Index nonzero = 0;
    while (nonzero < d && sigma(nonzero) > zero_tol) ++nonzero;

    ComplexMatrix u(d, d);
    Eigen::Index count = 0;

    // Within each singular value cluster the antilinear map T(x) = S conj(x)/sigma
    // squares to +1; its fixed vectors are Takagi columns.
    for (const Cluster& c : cluster_values(sigma, nonzero, 1e-11 * (1.0 + sig0))) {
        ComplexMatrix span = w.middleCols(c.first, c.size);
        for (Eigen::Index k = 0; k < c.size; ++k) {
            double sig = sigma(c.first + k);
            ComplexVector col;
            for (int attempt = 0;; ++attempt) {
                if (attempt > 3) throw NoConvergence("takagi: cluster extraction failed");
                ComplexVector seed = pick_seed(span, u, count, attempt);
                fix_phase(seed);
                ComplexVector t = s * seed.conjugate() / sig;
                ComplexVector plus = seed + t;
                ComplexVector minus = Complex(0, 1) * (seed - t);
                col = plus.norm() >= minus.norm() ? plus : minus;
                project_out(col, u, count);
                double n = col.norm();
                if (n > 0.5) {
                    col /= n;
                    break;
                }
            }
            fix_sign(col);
            u.col(count++) = col;
        }
    }
    fill_complement(u, count, d - count);

    RealVector b = sigma;
    for (Eigen::Index k = nonzero; k < d; ++k) b(k) = 0.0;
    return {UnitaryMatrix(std::move(u)), std::move(b)};
}

YoulaResult youla_antisymmetric(const ComplexMatrix& a_in) {
    if (a_in.rows() != a_in.cols())
        throw DimensionMismatch("youla_antisymmetric: matrix must be square");
    require_finite(a_in, "youla_antisymmetric");
    double scale = max_abs(a_in);
    if (max_abs(a_in + a_in.transpose()) > 1e-10 * (1.0 + scale))
        throw NotAntisymmetric("youla_antisymmetric: matrix is not antisymmetric");

    const Eigen::Index d = a_in.rows();
    ComplexMatrix a = 0.5 * (a_in - a_in.transpose());

    Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeFullU);
    if (solver.info() != Eigen::Success)
        throw NoConvergence("youla_antisymmetric: svd failed to converge");
    RealVector sigma = solver.singularValues();
    const ComplexMatrix& w = solver.matrixU();

    double sig0 = sigma.size() > 0 ? sigma(0) : 0.0;
    double zero_tol = 1e-12 * (1.0 + sig0);
    Eigen::Index nonzero = 0;
    while (nonzero < d && sigma(nonzero) > zero_tol) ++nonzero;
    // Nonzero singular values of an antisymmetric matrix come in equal pairs.
    if (nonzero % 2 != 0) {
        if (nonzero > 0 && sigma(nonzero - 1) <= 16 * zero_tol)
            --nonzero;
        else
            throw NumericalInconsistency("youla_antisymmetric: unpaired singular value");
    }
    for (Eigen::Index i = 0; i + 1 < nonzero; i += 2)
        if (sigma(i) - sigma(i + 1) > 1e-6 * (1.0 + sig0))
            throw NumericalInconsistency("youla_antisymmetric: singular values not paired");

    const Eigen::Index nblocks = d / 2;
    RealVector z = RealVector::Zero(nblocks);
    ComplexMatrix u(d, d);
    Eigen::Index count = 0;

    // Per cluster, T(x) = A conj(x)/z is antiunitary with T^2 = -1; each block is
    // (c, -A conj(c)/z) for a deterministic unit seed c.
    for (const Cluster& c : cluster_values(sigma, nonzero, 1e-11 * (1.0 + sig0))) {
        ComplexMatrix span = w.middleCols(c.first, c.size);
        for (Eigen::Index k = 0; k < c.size / 2; ++k) {
            double zb = 0.5 * (sigma(c.first + 2 * k) + sigma(c.first + 2 * k + 1));
            z(count / 2) = zb;
            ComplexVector c1;
            ComplexVector c2;
            for (int attempt = 0;; ++attempt) {
                if (attempt > 3) throw NoConvergence("youla_antisymmetric: extraction failed");
                c1 = pick_seed(span, u, count, attempt);
                fix_phase(c1);
                c2 = -(a * c1.conjugate()) / zb;
                project_out(c2, u, count);
                c2 -= c1 * (c1.adjoint() * c2);
                double n = c2.norm();
                if (n > 0.5) {
                    c2 /= n;
                    break;
                }
            }
            u.col(count++) = c1;
            u.col(count++) = c2;
        }
    }
    fill_complement(u, count, d - count);
    return {UnitaryMatrix(std::move(u)), std::move(z)};
}

ComplexMatrix youla_z_matrix(Eigen::Index dim, const RealVector& z) {
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index i = 0; 2 * i + 1 < dim; ++i) {
        out(2 * i, 2 * i + 1) = z(i);
        out(2 * i + 1, 2 * i) = -z(i);
    }
    return out;
}

}  // namespace ipent
