#include "wiretap/jammer.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include <cmath>

namespace wiretap {

namespace {

constexpr double kResolventGate = 1e-8;

// Smallest eigenvalue of a Hermitian matrix.
double min_eig(const Cmat& A) {
    HermitianEig e = eig_hermitian(A);
    return e.values(e.values.size() - 1);
}

// Clamps eigenvalues in (-1e-9 * scale, 0) to zero; larger violations are
// hard errors.
Cmat clamp_psd(const Cmat& K, const char* who) {
    if (K.rows() == 0) return K;
    HermitianEig e = eig_hermitian(K);
    const double floor = -1e-9 * (1.0 + K.norm());
    Rvec vals = e.values;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) < floor)
            throw NotPSD(std::string(who) + ": eigenvalue below PSD tolerance");
        if (vals(i) < 0.0) vals(i) = 0.0;
    }
    return herm(e.vectors * vals.asDiagonal() * e.vectors.adjoint());
}

Cmat diag_of(const Rvec& v) { return Cmat(v.cast<Complex>().asDiagonal()); }

}  // namespace

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Zero: return "Zero";
        case CaseTag::Case1: return "Case1";
        case CaseTag::Case2: return "Case2";
        case CaseTag::NullSpaceBaseline: return "NullSpaceBaseline";
    }
    return "?";
}

Cmat n_from_t(const PencilDecomposition& pencil, double t) {
    const Cmat L2 = diag_of(pencil.lambda2);
    return herm(pencil.lambda22 + t * (L2 - pencil.lambda22));
}

Cmat case1_q(const ChannelSet& ch, const Cmat& S, const PencilDecomposition& pencil,
             const Cmat& N) {
    ch.validate();
    const Eigen::Index n = ch.nt();
    if (S.rows() != n || S.cols() != n) throw DimensionMismatch("case1_q: bad S dimension");
    const Cmat Sh = sqrt_psd(S);
    if (min_eig(Sh) <= 1e-12 * (1.0 + Sh.norm()))
        throw SingularS("case1_q: S is numerically singular, regularize first");
    const Cmat Sinvh = Sh.lu().solve(Cmat::Identity(n, n));

    // Y = C^{-1} S^{-1/2}; the middle block touches only the last nt-b rows.
    const Cmat Y = pencil.C.lu().solve(Sinvh);
    const Cmat Y2 = Y.bottomRows(n - pencil.b);
    const Cmat gap = diag_of(pencil.lambda2) - N;
    const Cmat mid = herm(Y2.adjoint() * gap * Y2);

    const Cmat O = right_inverse(ch.G2.adjoint() * ch.H1);
    return herm(O.adjoint() * mid * O);
}

Cmat case1_kw(const Cmat& Q, const Cmat& G2) {
    if (Q.rows() != G2.cols())
        throw DimensionMismatch("case1_kw: Q/G2 dimension mismatch");
    const Cmat R = herm(G2 * Q * G2.adjoint());
    HermitianEig re = eig_hermitian(R);
    Rvec shifted(re.values.size());
    for (Eigen::Index i = 0; i < re.values.size(); ++i) {
        const double s = re.values(i) - 1.0;
        if (std::abs(s) < kResolventGate)
            throw NearSingularResolvent("case1_kw: eigenvalue of G2 Q G2^H near 1");
        shifted(i) = 1.0 / s;
    }
    const Cmat resolvent = re.vectors * shifted.asDiagonal() * re.vectors.adjoint();
    const Cmat QG = Q * G2.adjoint();
    return clamp_psd(herm(Q - QG * resolvent * QG.adjoint()), "case1_kw");
}

std::pair<double, JammerDesign> solve_t_for_power(const ChannelSet& ch, const Cmat& S,
                                                  const PencilDecomposition& pencil,
                                                  double Ph, double tol) {
    if (Ph <= 0.0) throw ConfigError("solve_t_for_power: Ph must be positive");
    const Eigen::Index n = ch.nt();
    const Eigen::Index nh = ch.nh();
    const Eigen::Index m = n - pencil.b;

    JammerDesign design;
    design.case_tag = CaseTag::Case1;
    auto fallback = [&](const std::string& why) {
        design.Kw = Cmat::Zero(nh, nh);
        design.t = 1.0;
        design.N = diag_of(pencil.lambda2);
        design.power_met = false;
        design.diagnostic = why;
        return std::pair<double, JammerDesign>{1.0, std::move(design)};
    };

    // Jamming leaves the receiver's information intact exactly when it
    // vanishes along the directions the optimal input excites, i.e. when
    // Kw is supported on null(C1^H S^{1/2} H1^H G2). The scalar N-path is
    // realized inside that subspace; values of N outside it correspond to
    // no admissible Kw at all.
    const Cmat V = pencil.C1.adjoint() * sqrt_psd(S) * ch.H1.adjoint() * ch.G2;
    const Cmat Gamma = V.rows() == 0 ? Cmat(Cmat::Identity(nh, nh)) : nullspace(V, 1e-10);
    if (Gamma.cols() == 0)
        return fallback("no jamming direction is invisible to the receiver");

    Cmat Pi;
    double eta = 0.0;
    try {
        std::tie(Pi, eta) = waterfill_pi(Gamma, ch.H2, Ph);
    } catch (const NoReachableModes& e) {
        return fallback(e.what());
    }
    design.Kw = herm(Gamma * Pi * Gamma.adjoint());
    design.Gamma = Gamma;
    design.Pi = std::move(Pi);
    design.eta = eta;
    if (std::abs(design.Kw.trace().real() - Ph) > tol * Ph)
        throw BracketFailure("solve_t_for_power: trace target missed");

    // Read N back off the achieved covariance; by construction the congruence
    // transform of the resulting channel Gram is blockdiag(Lambda1, N).
    const Eigen::Index nr = ch.nr();
    const Cmat W = (Cmat::Identity(nr, nr) + ch.G2 * design.Kw * ch.G2.adjoint())
                       .ldlt()
                       .solve(Cmat::Identity(nr, nr));
    const Cmat Sh = sqrt_psd(S);
    const Cmat JC = ch.H1 * Sh * pencil.C;
    const Cmat X = herm(JC.adjoint() * W * JC + pencil.C.adjoint() * pencil.C);
    design.N = herm(X.bottomRightCorner(m, m));

    // The line coordinate of N: t = 1 at zero jamming, decreasing toward 0 as
    // the jammer power grows.
    const double denom = (diag_of(pencil.lambda2) - pencil.lambda22).trace().real();
    const double num = (diag_of(pencil.lambda2) - design.N).trace().real();
    design.t = denom > 1e-12 ? std::min(1.0, std::max(0.0, 1.0 - num / denom)) : 1.0;
    const double t = design.t;
    return {t, std::move(design)};
}

Cmat case2_gamma(const ChannelSet& ch, const Cmat& Kx_star) {
    ch.validate();
    const Cmat M = sqrt_psd(Kx_star) * ch.H1.adjoint() * ch.G2;
    Cmat Gamma = nullspace(M, 1e-10);
    if (Gamma.cols() == 0)
        throw EmptyNullspace("case2_gamma: Kx*^{1/2} H1^H G2 has full column rank");
    return Gamma;
}

std::pair<Cmat, double> waterfill_pi(const Cmat& Gamma, const Cmat& H2, double Ph) {
    if (Ph <= 0.0) throw ConfigError("waterfill_pi: Ph must be positive");
    const Cmat HG = H2 * Gamma;
    HermitianEig e = eig_hermitian(herm(HG.adjoint() * HG));
    const Eigen::Index d = e.values.size();
    Eigen::Index reachable = 0;
    while (reachable < d && e.values(reachable) > 1e-12) ++reachable;
    if (reachable == 0)
        throw NoReachableModes("waterfill_pi: jamming subspace invisible to the eavesdropper");

    // Active set by descending eigenvalue: the largest k whose weakest active
    // mode still holds water.
    double eta = 0.0;
    Eigen::Index active = 0;
    double inv_sum = 0.0;
    for (Eigen::Index k = 1; k <= reachable; ++k) inv_sum += 1.0 / e.values(k - 1);
    for (Eigen::Index k = reachable; k >= 1; --k) {
        eta = (Ph + inv_sum) / static_cast<double>(k);
        if (eta > 1.0 / e.values(k - 1)) {
            active = k;
            break;
        }
        inv_sum -= 1.0 / e.values(k - 1);
    }

    Rvec delta = Rvec::Zero(d);
    for (Eigen::Index i = 0; i < active; ++i) delta(i) = eta - 1.0 / e.values(i);
    const Cmat Pi = herm(e.vectors * delta.asDiagonal() * e.vectors.adjoint());
    return {Pi, eta};
}

JammerDesign nullspace_baseline_kw(const ChannelSet& ch, double Ph) {
    ch.validate();
    Cmat Gamma = nullspace(ch.G2, 1e-10);
    if (Gamma.cols() == 0)
        throw EmptyNullspace("nullspace_baseline_kw: G2 has no nullspace");
    auto [Pi, eta] = waterfill_pi(Gamma, ch.H2, Ph);
    JammerDesign design;
    design.case_tag = CaseTag::NullSpaceBaseline;
    design.Gamma = std::move(Gamma);
    design.Kw = herm(design.Gamma * Pi * design.Gamma.adjoint());
    design.Pi = std::move(Pi);
    design.eta = eta;
    return design;
}

DesignOutcome design_jammer(const ChannelSet& ch, const PowerBudget& budget) {
    ch.validate();
    const Eigen::Index n = ch.nt();
    Cmat S = herm(budget.S);
    PencilDecomposition pencil0 = effective_pencil(ch, S, Cmat::Zero(ch.nh(), ch.nh()));

    DesignOutcome out;
    out.rate_no_helper = capacity_of_pencil(pencil0);

    if (budget.Ph <= 0.0) {
        out.design.case_tag = CaseTag::Zero;
        out.design.Kw = Cmat::Zero(ch.nh(), ch.nh());
        out.Kx_updated = optimal_kx(pencil0, S);
        out.rate_with_helper = out.rate_no_helper;
        return out;
    }

    const bool case1 = ch.nh() <= std::min(ch.nr(), ch.nt()) && pencil0.b > 0;
    if (case1) {
        // The closed form needs S^{-1/2}; a singular S gets a vanishing ridge
        // and a pencil recomputed against the regularized S.
        HermitianEig se = eig_hermitian(S);
        if (se.values(se.values.size() - 1) <= 1e-12 * (1.0 + S.norm())) {
            const double tr = S.trace().real();
            const double eps = 1e-9 * (tr > 0.0 ? tr : 1.0) / static_cast<double>(n);
            S = S + eps * Cmat::Identity(n, n);
            pencil0 = effective_pencil(ch, S, Cmat::Zero(ch.nh(), ch.nh()));
        }
        auto [t, design] = solve_t_for_power(ch, S, pencil0, budget.Ph);
        (void)t;
        out.design = std::move(design);
    } else {
        out.design.case_tag = CaseTag::Case2;
        out.design.Kw = Cmat::Zero(ch.nh(), ch.nh());
        try {
            Cmat Kx0 = optimal_kx(pencil0, S);
            Cmat Gamma = case2_gamma(ch, Kx0);
            auto [Pi, eta] = waterfill_pi(Gamma, ch.H2, budget.Ph);
            out.design.Kw = herm(Gamma * Pi * Gamma.adjoint());
            out.design.Gamma = std::move(Gamma);
            out.design.Pi = std::move(Pi);
            out.design.eta = eta;
        } catch (const EmptyNullspace& e) {
            out.design.power_met = false;
            out.design.diagnostic = e.what();
        } catch (const NoReachableModes& e) {
            out.design.power_met = false;
            out.design.diagnostic = e.what();
        }

        // Noise confined to null(G2) leaves the receiver clean for every
        // input, not just the current optimum, which sometimes wins after
        // the input covariance update. Keep whichever rates higher.
        try {
            JammerDesign base = nullspace_baseline_kw(ch, budget.Ph);
            const double full = capacity_given_kw(ch, S, out.design.Kw);
            const double restricted = capacity_given_kw(ch, S, base.Kw);
            if (restricted > full) {
                out.design.Kw = std::move(base.Kw);
                out.design.Gamma = std::move(base.Gamma);
                out.design.Pi = std::move(base.Pi);
                out.design.eta = base.eta;
                out.design.power_met = true;
                out.design.diagnostic.clear();
            }
        } catch (const EmptyNullspace&) {
        } catch (const NoReachableModes&) {
        }
    }

    PencilDecomposition updated = effective_pencil(ch, S, out.design.Kw);
    out.Kx_updated = optimal_kx(updated, S);
    out.rate_with_helper = capacity_of_pencil(updated);
    return out;
}

}  // namespace wiretap
