#pragma once

// Dense complex Hermitian linear algebra used throughout the library:
// Cholesky, Hermitian eigendecomposition, the HPD generalized eigenvalue
// pencil, PSD square roots, right inverses and nullspaces.
//
// All functions are pure; inputs are never modified.

#include "wiretap/types.hpp"

#include <utility>

namespace wiretap {

// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending
// (stable, ties keep the ascending-solver order).
struct HermitianEig {
    Rvec values;   // descending
    Cmat vectors;  // orthonormal columns, A = V diag(values) V^H
};

// Generalized eigenstructure of an HPD pencil (A, B):
//   C^H B C = I,  C^H A C = diag(lambdas),  lambdas descending.
struct Gevd {
    Cmat C;        // invertible, n x n
    Rvec lambdas;  // real, positive, descending
};

// Lower-triangular L with L L^H = A. Throws NotPositiveDefinite.
Cmat cholesky_hpd(const Cmat& A);

// Throws ConvergenceFailure if the underlying iteration fails.
HermitianEig eig_hermitian(const Cmat& A);

// HPD pencil decomposition via Cholesky reduction of B.
Gevd gevd_pencil(const Cmat& A, const Cmat& B);

// Hermitian PSD square root; eigenvalues in [-1e-10*(1+||A||_F), 0) are
// clamped to zero, anything below that throws NotPSD.
Cmat sqrt_psd(const Cmat& A);

// Minimum-norm right inverse M^H (M M^H)^{-1} of a full-row-rank matrix.
// Throws RankDeficient when smallest/largest singular value < 1e-10.
Cmat right_inverse(const Cmat& M);

// Orthonormal basis of {x : M x = 0} with singular values below
// tol * sigma_max treated as zero. M = 0 (or zero rows) yields the full
// identity basis; an empty nullspace yields a cols x 0 matrix.
Cmat nullspace(const Cmat& M, double tol = 1e-10);

// Loewner order test: A <= B iff min eig(B - A) >= -tol*(1+||B-A||_F).
bool loewner_leq(const Cmat& A, const Cmat& B, double tol = 1e-9);

// Frobenius norm helpers used by callers for tolerance scaling.
inline double fro(const Cmat& A) { return A.norm(); }

// Hermitian symmetrization (A + A^H)/2.
inline Cmat herm(const Cmat& A) { return 0.5 * (A + A.adjoint()); }

}  // namespace wiretap
