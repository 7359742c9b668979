#include "wiretap/power_search.hpp"

#include "wiretap/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wiretap {

namespace {

constexpr int kRestarts = 64;          // deterministic + random restart prefix
constexpr double kScaleStart = 0.3;    // refinement perturbation scale
constexpr double kScaleFloor = 1e-3;
constexpr int kStallWindow = 50;       // non-improving evals before halving

Cmat trace_normalized(const Cmat& F, double Pt) {
    Cmat S = herm(F * F.adjoint());
    const double tr = S.trace().real();
    if (tr <= 0.0) return Cmat::Zero(S.rows(), S.cols());
    return S * (Pt / tr);
}

// Waterfilling of Pt over the eigenmodes of H1^H H1; the exact no-eavesdropper
// optimum and a strong deterministic seed elsewhere.
Cmat waterfilled_candidate(const Cmat& H1, double Pt) {
    const Eigen::Index n = H1.cols();
    HermitianEig e = eig_hermitian(herm(H1.adjoint() * H1));
    Eigen::Index reachable = 0;
    while (reachable < n && e.values(reachable) > 1e-12) ++reachable;
    if (reachable == 0) return (Pt / static_cast<double>(n)) * Cmat::Identity(n, n);
    double inv_sum = 0.0;
    for (Eigen::Index k = 0; k < reachable; ++k) inv_sum += 1.0 / e.values(k);
    double mu = 0.0;
    Eigen::Index active = 0;
    for (Eigen::Index k = reachable; k >= 1; --k) {
        mu = (Pt + inv_sum) / static_cast<double>(k);
        if (mu > 1.0 / e.values(k - 1)) {
            active = k;
            break;
        }
        inv_sum -= 1.0 / e.values(k - 1);
    }
    Rvec p = Rvec::Zero(n);
    for (Eigen::Index i = 0; i < active; ++i) p(i) = mu - 1.0 / e.values(i);
    return herm(e.vectors * p.asDiagonal() * e.vectors.adjoint());
}

// S aligned with the generalized eigenvectors of the isotropic Kw = 0 pencil
// that carry rate (equal power across them).
Cmat pencil_aligned_candidate(const ChannelSet& ch, double Pt) {
    const Eigen::Index n = ch.nt();
    const Cmat Siso = (Pt / static_cast<double>(n)) * Cmat::Identity(n, n);
    PencilDecomposition p = effective_pencil(ch, Siso, Cmat::Zero(ch.nh(), ch.nh()));
    if (p.b == 0) return Siso;
    const Cmat D = sqrt_psd(Siso) * p.C1;
    return trace_normalized(D, Pt);
}

Cmat random_factor(Rng& rng, Eigen::Index n) {
    Cmat L = Cmat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) L(i, j) = rng.cnormal();
    return L;
}

}  // namespace

SearchReport search_s(const ChannelSet& ch, const PowerBudget& budget, int eval_budget,
                      std::uint64_t seed) {
    ch.validate();
    if (eval_budget < 1) throw ConfigError("search_s: eval_budget must be >= 1");
    if (budget.Pt <= 0.0) throw ConfigError("search_s: Pt must be positive");
    const Eigen::Index n = ch.nt();
    const double Pt = budget.Pt;

    SearchReport report;
    report.rate_best = -std::numeric_limits<double>::infinity();
    Cmat best_factor;  // factor of the incumbent, refinement basis

    double scale = kScaleStart;
    int stall = 0;

    auto consider = [&](int index, const Cmat& S, const Cmat& factor) {
        DesignOutcome outcome = design_jammer(ch, PowerBudget{S, budget.Ph, Pt});
        ++report.evaluations;
        if (outcome.rate_with_helper > report.rate_best) {
            report.rate_best = outcome.rate_with_helper;
            report.S_best = S;
            best_factor = factor;
            stall = 0;
        } else if (++stall >= kStallWindow) {
            stall = 0;
            scale = std::max(scale * 0.5, kScaleFloor);
        }
        report.history.emplace_back(index, report.rate_best);
    };

    for (int i = 0; i < eval_budget; ++i) {
        Cmat S, factor;
        if (i == 0) {
            S = (Pt / static_cast<double>(n)) * Cmat::Identity(n, n);
            factor = sqrt_psd(S);
        } else if (i == 1) {
            S = waterfilled_candidate(ch.H1, Pt);
            factor = sqrt_psd(S);
        } else if (i == 2) {
            S = pencil_aligned_candidate(ch, Pt);
            factor = sqrt_psd(S);
        } else if (i < kRestarts) {
            Rng rng(derive_key(seed, static_cast<std::uint64_t>(i), 1));
            factor = random_factor(rng, n);
            S = trace_normalized(factor, Pt);
        } else {
            // Perturb one coordinate of the incumbent factor, cycling.
            Rng rng(derive_key(seed, static_cast<std::uint64_t>(i), 2));
            factor = best_factor;
            const Eigen::Index k = static_cast<Eigen::Index>(
                static_cast<std::uint64_t>(i - kRestarts) % static_cast<std::uint64_t>(n * n));
            const double mag = std::max(factor.norm() / static_cast<double>(n), 1e-12);
            factor(k / n, k % n) += scale * mag * rng.cnormal();
            S = trace_normalized(factor, Pt);
        }
        consider(i, S, factor);
    }
    report.converged = scale <= kScaleFloor;
    return report;
}

std::vector<std::pair<double, double>> sweep_power_split(const ChannelSet& ch, double P_total,
                                                         const std::vector<double>& ph_grid,
                                                         int eval_budget, std::uint64_t seed) {
    std::vector<std::pair<double, double>> out;
    out.reserve(ph_grid.size());
    for (size_t g = 0; g < ph_grid.size(); ++g) {
        const double ph = ph_grid[g];
        if (ph >= P_total) throw ConfigError("sweep_power_split: Ph must be < P_total");
        PowerBudget budget;
        budget.Ph = ph;
        budget.Pt = P_total - ph;
        SearchReport rep = search_s(ch, budget, eval_budget,
                                    derive_key(seed, static_cast<std::uint64_t>(g), 7));
        out.emplace_back(ph, rep.rate_best);
    }
    return out;
}

}  // namespace wiretap
