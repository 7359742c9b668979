#pragma once

// Secrecy-rate machinery: log-det rate evaluation, the effective HPD pencil
// for a given jamming covariance, the capacity it induces, and the optimal
// input covariance. All rates are in bits per channel use (log base 2).

#include "wiretap/channel.hpp"
#include "wiretap/linalg.hpp"

namespace wiretap {

// Generalized eigenstructure of the secrecy pencil, partitioned at the
// unit-eigenvalue threshold:
//   lambdas(0) >= ... >= lambdas(b-1) > 1 >= lambdas(b) >= ...
struct PencilDecomposition {
    Cmat C;         // invertible nt x nt, C^H B C = I, C^H A C = diag(lambdas)
    Rvec lambdas;   // descending, real positive
    Eigen::Index b = 0;  // count of eigenvalues > 1 + eigtol
    Cmat C1;        // nt x b
    Cmat C2;        // nt x (nt-b)
    Rvec lambda1;   // the b eigenvalues > 1
    Rvec lambda2;   // the remaining nt-b eigenvalues
    Cmat lambda22;  // (nt-b) x (nt-b) lower bound of the admissible N range
};

// Eigenvalues within eigtol of 1 do not count toward b; they carry no rate
// but would destabilize (C1^H C1)^{-1}.
inline constexpr double kEigTol = 1e-9;

// log2 det(I + X) for Hermitian PSD X, via Cholesky of I + X.
double logdet2_i_plus_psd(const Cmat& X);

// The raw secrecy rate for given covariances (may be negative):
//   log2|Kx H1^H (G2 Kw G2^H + I)^{-1} H1 + I|
// - log2|Kx G1^H (H2 Kw H2^H + I)^{-1} G1 + I|.
double secrecy_rate(const ChannelSet& ch, const Cmat& Kx, const Cmat& Kw);

// Receiver-side mutual information log2|Kx H1^H (G2 Kw G2^H + I)^{-1} H1 + I|.
double mutual_info_receiver(const ChannelSet& ch, const Cmat& Kx, const Cmat& Kw);

// Eavesdropper analogue log2|Kx G1^H (H2 Kw H2^H + I)^{-1} G1 + I|.
double mutual_info_eavesdropper(const ChannelSet& ch, const Cmat& Kx, const Cmat& Kw);

// Builds and decomposes the pencil
//   A = S^{1/2} H1^H (G2 Kw G2^H + I)^{-1} H1 S^{1/2} + I
//   B = S^{1/2} G1^H (H2 Kw H2^H + I)^{-1} G1 S^{1/2} + I.
PencilDecomposition effective_pencil(const ChannelSet& ch, const Cmat& S, const Cmat& Kw);

// Secrecy capacity for fixed Kw under Kx <= S: sum of log2 of the pencil
// eigenvalues greater than one (zero when none are).
double capacity_given_kw(const ChannelSet& ch, const Cmat& S, const Cmat& Kw);
double capacity_of_pencil(const PencilDecomposition& pencil);

// Capacity-achieving input covariance
//   Kx* = S^{1/2} C blockdiag((C1^H C1)^{-1}, 0) C^H S^{1/2}.
Cmat optimal_kx(const PencilDecomposition& pencil, const Cmat& S);

// log2 det((C1^H C1)^{-1} Lambda1); equals the receiver mutual information
// at (Kx*, Kw = 0).
double lemma2_value(const PencilDecomposition& pencil);

}  // namespace wiretap
