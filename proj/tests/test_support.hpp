#pragma once

// Shared generators for randomized tests. Everything is driven by the
// deterministic library RNG so failures reproduce exactly.

#include "wiretap/rng.hpp"
#include "wiretap/channel.hpp"
#include "wiretap/linalg.hpp"

namespace wiretap::testing {

inline Cmat random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, double var = 1.0) {
    return rng.cnormal_matrix(rows, cols, var);
}

inline Cmat random_hermitian(Rng& rng, Eigen::Index n) {
    return herm(rng.cnormal_matrix(n, n));
}

// HPD with eigenvalues in roughly [lo, hi] through a random unitary.
inline Cmat random_hpd(Rng& rng, Eigen::Index n, double lo = 0.5, double hi = 8.0) {
    const Cmat X = rng.cnormal_matrix(n, n);
    Eigen::HouseholderQR<Cmat> qr(X);
    const Cmat U = qr.householderQ() * Cmat::Identity(n, n);
    Rvec vals(n);
    for (Eigen::Index i = 0; i < n; ++i) vals(i) = lo + (hi - lo) * rng.uniform();
    return herm(U * vals.asDiagonal() * U.adjoint());
}

inline Cmat random_psd(Rng& rng, Eigen::Index n, double scale = 1.0) {
    const Cmat X = rng.cnormal_matrix(n, n);
    return herm(scale * X * X.adjoint() / static_cast<double>(n));
}

inline ChannelSet random_channels(Rng& rng, Eigen::Index nt, Eigen::Index nr, Eigen::Index ne,
                                  Eigen::Index nh, double var_d = 1.0, double var_c = 1.0) {
    ChannelSet ch;
    ch.H1 = rng.cnormal_matrix(nr, nt, var_d);
    ch.G1 = rng.cnormal_matrix(ne, nt, var_c);
    ch.H2 = rng.cnormal_matrix(ne, nh, var_c);
    ch.G2 = rng.cnormal_matrix(nr, nh, var_d);
    return ch;
}

// A feasible Kx <= S: Kx = S^{1/2} U diag(u) U^H S^{1/2}, u in [0,1]^n.
inline Cmat random_feasible_kx(Rng& rng, const Cmat& S) {
    const Eigen::Index n = S.rows();
    const Cmat X = rng.cnormal_matrix(n, n);
    Eigen::HouseholderQR<Cmat> qr(X);
    const Cmat U = qr.householderQ() * Cmat::Identity(n, n);
    Rvec u(n);
    for (Eigen::Index i = 0; i < n; ++i) u(i) = rng.uniform();
    const Cmat Sh = sqrt_psd(S);
    return herm(Sh * U * u.asDiagonal() * U.adjoint() * Sh);
}

inline double min_eig(const Cmat& A) {
    HermitianEig e = eig_hermitian(A);
    return e.values(e.values.size() - 1);
}

}  // namespace wiretap::testing
