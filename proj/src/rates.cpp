#include "wiretap/rates.hpp"

#include <cmath>

namespace wiretap {

namespace {

const double kLn2 = std::log(2.0);

void require_psd_shape(const Cmat& K, Eigen::Index n, const char* name) {
    if (K.rows() != n || K.cols() != n)
        throw DimensionMismatch(std::string(name) + ": wrong covariance dimension");
}

// (W + I)^{-1} applied from both sides of V: V^H (noise + I)^{-1} V,
// with noise = J K J^H. Returns a Hermitian nt' x nt' matrix.
Cmat whitened_gram(const Cmat& V, const Cmat& J, const Cmat& K) {
    const Eigen::Index m = V.rows();
    Cmat W = Cmat::Identity(m, m);
    if (K.size() > 0 && J.size() > 0) W += J * K * J.adjoint();
    const Cmat L = cholesky_hpd(W);
    const Cmat Y = L.triangularView<Eigen::Lower>().solve(V);
    return herm(Y.adjoint() * Y);
}

// log2|Kx A + I| for PSD Kx and PSD A, evaluated on the Hermitian form
// Kx^{1/2} A Kx^{1/2} + I.
double logdet2_kx_form(const Cmat& Kx, const Cmat& A) {
    const Cmat R = sqrt_psd(Kx);
    return logdet2_i_plus_psd(herm(R * A * R));
}

}  // namespace

void ChannelSet::validate() const {
    if (H1.rows() != G2.rows()) throw DimensionMismatch("ChannelSet: H1/G2 row mismatch (nr)");
    if (G1.rows() != H2.rows()) throw DimensionMismatch("ChannelSet: G1/H2 row mismatch (ne)");
    if (H1.cols() != G1.cols()) throw DimensionMismatch("ChannelSet: H1/G1 col mismatch (nt)");
    if (H2.cols() != G2.cols()) throw DimensionMismatch("ChannelSet: H2/G2 col mismatch (nh)");
}

double logdet2_i_plus_psd(const Cmat& X) {
    if (X.rows() == 0) return 0.0;
    const Cmat L = cholesky_hpd(Cmat::Identity(X.rows(), X.cols()) + X);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < L.rows(); ++i) acc += std::log(L(i, i).real());
    return 2.0 * acc / kLn2;
}

double mutual_info_receiver(const ChannelSet& ch, const Cmat& Kx, const Cmat& Kw) {
    ch.validate();
    require_psd_shape(Kx, ch.nt(), "Kx");
    require_psd_shape(Kw, ch.nh(), "Kw");
    return logdet2_kx_form(Kx, whitened_gram(ch.H1, ch.G2, Kw));
}

double mutual_info_eavesdropper(const ChannelSet& ch, const Cmat& Kx, const Cmat& Kw) {
    ch.validate();
    require_psd_shape(Kx, ch.nt(), "Kx");
    require_psd_shape(Kw, ch.nh(), "Kw");
    return logdet2_kx_form(Kx, whitened_gram(ch.G1, ch.H2, Kw));
}

double secrecy_rate(const ChannelSet& ch, const Cmat& Kx, const Cmat& Kw) {
    return mutual_info_receiver(ch, Kx, Kw) - mutual_info_eavesdropper(ch, Kx, Kw);
}

PencilDecomposition effective_pencil(const ChannelSet& ch, const Cmat& S, const Cmat& Kw) {
    ch.validate();
    require_psd_shape(S, ch.nt(), "S");
    require_psd_shape(Kw, ch.nh(), "Kw");
    const Eigen::Index n = ch.nt();
    const Cmat Sh = sqrt_psd(S);
    const Cmat A = herm(Sh * whitened_gram(ch.H1, ch.G2, Kw) * Sh) + Cmat::Identity(n, n);
    const Cmat B = herm(Sh * whitened_gram(ch.G1, ch.H2, Kw) * Sh) + Cmat::Identity(n, n);
    Gevd g = gevd_pencil(A, B);

    PencilDecomposition p;
    p.C = std::move(g.C);
    p.lambdas = std::move(g.lambdas);
    p.b = 0;
    while (p.b < n && p.lambdas(p.b) > 1.0 + kEigTol) ++p.b;
    p.C1 = p.C.leftCols(p.b);
    p.C2 = p.C.rightCols(n - p.b);
    p.lambda1 = p.lambdas.head(p.b);
    p.lambda2 = p.lambdas.tail(n - p.b);

    // Lambda22 = C2^H C2 + C2^H C1 (Lambda1 - C1^H C1)^{-1} C1^H C2;
    // with b = 0 the second term is an empty product.
    const Cmat G22 = p.C2.adjoint() * p.C2;
    if (p.b > 0) {
        const Cmat inner = Cmat(p.lambda1.asDiagonal()) - p.C1.adjoint() * p.C1;
        Eigen::LLT<Cmat> llt(herm(inner));
        if (llt.info() != Eigen::Success)
            throw SingularBlock("effective_pencil: Lambda1 - C1^H C1 not positive definite");
        const Cmat X = p.C1.adjoint() * p.C2;
        p.lambda22 = herm(G22 + X.adjoint() * llt.solve(X));
    } else {
        p.lambda22 = herm(G22);
    }
    return p;
}

double capacity_of_pencil(const PencilDecomposition& pencil) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < pencil.b; ++i) acc += std::log(pencil.lambda1(i));
    return acc / kLn2;
}

double capacity_given_kw(const ChannelSet& ch, const Cmat& S, const Cmat& Kw) {
    return capacity_of_pencil(effective_pencil(ch, S, Kw));
}

Cmat optimal_kx(const PencilDecomposition& pencil, const Cmat& S) {
    const Eigen::Index n = pencil.C.rows();
    if (pencil.b == 0) return Cmat::Zero(n, n);
    const Cmat gram = pencil.C1.adjoint() * pencil.C1;
    Eigen::LLT<Cmat> llt(herm(gram));
    if (llt.info() != Eigen::Success)
        throw SingularBlock("optimal_kx: C1^H C1 numerically singular");
    const Cmat Sh = sqrt_psd(S);
    const Cmat W = Sh * pencil.C1;
    return herm(W * llt.solve(W.adjoint()));
}

double lemma2_value(const PencilDecomposition& pencil) {
    if (pencil.b == 0) return 0.0;
    const Cmat gram = pencil.C1.adjoint() * pencil.C1;
    Eigen::LLT<Cmat> llt(herm(gram));
    if (llt.info() != Eigen::Success)
        throw SingularBlock("lemma2_value: C1^H C1 numerically singular");
    double acc = 0.0;
    for (Eigen::Index i = 0; i < pencil.b; ++i) {
        acc += std::log(pencil.lambda1(i));
        acc -= 2.0 * std::log(Cmat(llt.matrixLLT())(i, i).real());
    }
    return acc / kLn2;
}

}  // namespace wiretap
