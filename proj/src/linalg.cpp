#include "wiretap/linalg.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <numeric>
#include <vector>

namespace wiretap {

namespace {

void require_square(const Cmat& A, const char* who) {
    if (A.rows() != A.cols())
        throw DimensionMismatch(std::string(who) + ": matrix must be square");
}

// Reorders an ascending eigendecomposition to descending, stable in the
// original index so ties are broken deterministically.
HermitianEig descending(const Eigen::SelfAdjointEigenSolver<Cmat>& es) {
    const Eigen::Index n = es.eigenvalues().size();
    std::vector<Eigen::Index> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index a, Eigen::Index b) {
        return es.eigenvalues()(a) > es.eigenvalues()(b);
    });
    HermitianEig out;
    out.values.resize(n);
    out.vectors.resize(es.eigenvectors().rows(), n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values(k) = es.eigenvalues()(idx[static_cast<size_t>(k)]);
        out.vectors.col(k) = es.eigenvectors().col(idx[static_cast<size_t>(k)]);
    }
    return out;
}

}  // namespace

Cmat cholesky_hpd(const Cmat& A) {
    require_square(A, "cholesky_hpd");
    Eigen::LLT<Cmat> llt(herm(A));
    if (llt.info() != Eigen::Success)
        throw NotPositiveDefinite("cholesky_hpd: non-positive pivot");
    return llt.matrixL();
}

HermitianEig eig_hermitian(const Cmat& A) {
    require_square(A, "eig_hermitian");
    Eigen::SelfAdjointEigenSolver<Cmat> es(herm(A));
    if (es.info() != Eigen::Success)
        throw ConvergenceFailure("eig_hermitian: iteration did not converge");
    return descending(es);
}

Gevd gevd_pencil(const Cmat& A, const Cmat& B) {
    require_square(A, "gevd_pencil");
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("gevd_pencil: A and B must have equal dimensions");
    // Reduce with B = L L^H, solve the standard problem on L^{-1} A L^{-H},
    // back-transform C = L^{-H} V.
    const Cmat L = cholesky_hpd(B);
    const auto Lt = L.triangularView<Eigen::Lower>();
    Cmat W = Lt.solve(herm(A));
    W = Lt.solve(W.adjoint()).adjoint();
    HermitianEig eig = eig_hermitian(W);
    Gevd out;
    out.lambdas = eig.values;
    out.C = L.adjoint().triangularView<Eigen::Upper>().solve(eig.vectors);
    return out;
}

Cmat sqrt_psd(const Cmat& A) {
    require_square(A, "sqrt_psd");
    if (A.rows() == 0) return A;
    HermitianEig eig = eig_hermitian(A);
    const double scale = 1.0 + A.norm();
    Rvec vals = eig.values;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) < -1e-10 * scale)
            throw NotPSD("sqrt_psd: eigenvalue below PSD tolerance");
        vals(i) = vals(i) > 0.0 ? std::sqrt(vals(i)) : 0.0;
    }
    return herm(eig.vectors * vals.asDiagonal() * eig.vectors.adjoint());
}

Cmat right_inverse(const Cmat& M) {
    if (M.rows() > M.cols())
        throw RankDeficient("right_inverse: more rows than columns");
    Eigen::JacobiSVD<Cmat> svd(M);
    const Rvec& sv = svd.singularValues();
    if (sv.size() == 0 || sv(sv.size() - 1) <= 1e-10 * sv(0))
        throw RankDeficient("right_inverse: matrix is not full row rank");
    const Cmat MMh = M * M.adjoint();
    return M.adjoint() * MMh.llt().solve(Cmat::Identity(M.rows(), M.rows()));
}

Cmat nullspace(const Cmat& M, double tol) {
    const Eigen::Index n = M.cols();
    if (M.rows() == 0 || M.isZero(0.0)) return Cmat::Identity(n, n);
    Eigen::JacobiSVD<Cmat> svd(M, Eigen::ComputeFullV);
    const Rvec& sv = svd.singularValues();
    const double cutoff = tol * sv(0);
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) ++rank;
    return svd.matrixV().rightCols(n - rank);
}

bool loewner_leq(const Cmat& A, const Cmat& B, double tol) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw DimensionMismatch("loewner_leq: dimension mismatch");
    const Cmat D = herm(B - A);
    if (D.rows() == 0) return true;
    HermitianEig eig = eig_hermitian(D);
    return eig.values(eig.values.size() - 1) >= -tol * (1.0 + D.norm());
}

}  // namespace wiretap
