// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include "wiretap/experiment.hpp"
#include "wiretap/matrix_io.hpp"

#include "test_support.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace wiretap;
using namespace wiretap::testing;

namespace {

int g_failures = 0;
std::vector<TrialRecord> g_records;  // pooled Monte-Carlo trials for the never-lose check

void report(int index, bool ok, const std::string& what) {
    std::printf("criterion %2d: %s  %s\n", index, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++g_failures;
}

Cmat diag_c(const Rvec& v) { return Cmat(v.cast<Complex>().asDiagonal()); }

struct Instance {
    ChannelSet ch;
    Cmat S;
    PencilDecomposition pencil;
};

Instance make_active(Rng& rng, Eigen::Index nt, Eigen::Index nr, Eigen::Index ne,
                     Eigen::Index nh, double var_d = 2.0, double var_c = 0.5) {
    for (;;) {
        Instance inst;
        inst.ch = random_channels(rng, nt, nr, ne, nh, var_d, var_c);
        inst.S = random_hpd(rng, nt, 0.5, 6.0);
        inst.pencil = effective_pencil(inst.ch, inst.S, Cmat::Zero(nh, nh));
        if (inst.pencil.b > 0 && inst.pencil.b < nt) return inst;
    }
}

// pencil congruence over random HPD pairs up to 10x10
void criterion_1() {
    Rng rng(derive_key(1001, 0, 0));
    bool ok = true;
    for (int rep = 0; rep < 200; ++rep) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.next_u64() % 9);
        const Cmat A = random_hpd(rng, n, 0.1, 20.0);
        const Cmat B = random_hpd(rng, n, 0.1, 20.0);
        Gevd g = gevd_pencil(A, B);
        const Cmat In = Cmat::Identity(n, n);
        if ((g.C.adjoint() * B * g.C - In).norm() > 1e-9) ok = false;
        if ((g.C.adjoint() * A * g.C - diag_c(g.lambdas)).norm() > 1e-9 * (1.0 + A.norm()))
            ok = false;
    }
    report(1, ok, "joint diagonalization congruence over 200 random HPD pairs");
}

// fixed-jamming capacity beats 1e5 random feasible inputs and is attained
void criterion_2() {
    Rng rng(derive_key(1002, 0, 0));
    bool ok = true;
    for (int inst_i = 0; inst_i < 20; ++inst_i) {
        const Eigen::Index nt = 2 + static_cast<Eigen::Index>(rng.next_u64() % 2);
        const Eigen::Index nr = 2 + static_cast<Eigen::Index>(rng.next_u64() % 2);
        const Eigen::Index ne = 2 + static_cast<Eigen::Index>(rng.next_u64() % 2);
        ChannelSet ch = random_channels(rng, nt, nr, ne, 2, 1.5, 0.8);
        const Cmat S = random_hpd(rng, nt, 0.5, 5.0);
        const Cmat Kw = random_psd(rng, 2, 2.0);

        const double cap = capacity_given_kw(ch, S, Kw);
        PencilDecomposition pencil = effective_pencil(ch, S, Kw);
        const Cmat Kx_star = optimal_kx(pencil, S);
        if (std::abs(secrecy_rate(ch, Kx_star, Kw) - cap) > 1e-8) ok = false;

        // whitened square roots make the inner loop two small determinants
        const Cmat W1 = (Cmat::Identity(nr, nr) + ch.G2 * Kw * ch.G2.adjoint()).inverse();
        const Cmat W2 = (Cmat::Identity(ne, ne) + ch.H2 * Kw * ch.H2.adjoint()).inverse();
        const Cmat R1 = sqrt_psd(herm(ch.H1.adjoint() * W1 * ch.H1));
        const Cmat R2 = sqrt_psd(herm(ch.G1.adjoint() * W2 * ch.G1));
        const Cmat Sh = sqrt_psd(S);
        const Cmat In = Cmat::Identity(nt, nt);

        double best = -1e300;
        Rvec u(nt);
        for (int k = 0; k < 100000; ++k) {
            const Cmat X = rng.cnormal_matrix(nt, nt);
            Eigen::HouseholderQR<Cmat> qr(X);
            const Cmat U = qr.householderQ() * In;
            for (Eigen::Index i = 0; i < nt; ++i) u(i) = rng.uniform();
            const Cmat Kx = Sh * U * u.asDiagonal() * U.adjoint() * Sh;
            const double r = std::log2((In + R1 * Kx * R1).determinant().real()) -
                             std::log2((In + R2 * Kx * R2).determinant().real());
            best = std::max(best, r);
        }
        if (cap - best < -1e-9) ok = false;
    }
    report(2, ok, "fixed-jamming capacity dominates 1e5 random feasible inputs x 20 instances");
}

// closed-form receiver information at the optimal input
void criterion_3() {
    Rng rng(derive_key(1003, 0, 0));
    bool ok = true;
    for (int rep = 0; rep < 100; ++rep) {
        Instance inst = make_active(rng, 3, 3, 2, 2);
        const Cmat Kx = optimal_kx(inst.pencil, inst.S);
        const double direct =
            mutual_info_receiver(inst.ch, Kx, Cmat::Zero(inst.ch.nh(), inst.ch.nh()));
        if (std::abs(direct - lemma2_value(inst.pencil)) > 1e-8) ok = false;
    }
    report(3, ok, "closed-form receiver information identity over 100 draws");
}

// admissible-range structure and off-block necessity
void criterion_4() {
    Rng rng(derive_key(1004, 0, 0));
    bool ok = true;
    int breaks = 0;
    const int reps = 100;
    for (int rep = 0; rep < reps; ++rep) {
        Instance inst = make_active(rng, 3, 3, 2, 2);
        const Eigen::Index n = inst.ch.nt();
        const Eigen::Index m = n - inst.pencil.b;

        const Cmat Wd = diag_c(inst.pencil.lambda2) - inst.pencil.lambda22;
        const Cmat Wh = sqrt_psd(herm(Wd));
        const Cmat X = random_matrix(rng, m, m);
        HermitianEig fe = eig_hermitian(herm(X + X.adjoint()));
        Rvec f(m);
        for (Eigen::Index i = 0; i < m; ++i) f(i) = rng.uniform();
        const Cmat F = herm(fe.vectors * f.asDiagonal() * fe.vectors.adjoint());
        const Cmat N = herm(inst.pencil.lambda22 + Wh * F * Wh);

        const Cmat Sinvh = sqrt_psd(inst.S).inverse();
        const Cmat Cinv = inst.pencil.C.inverse();
        Cmat block = Cmat::Zero(n, n);
        block.topLeftCorner(inst.pencil.b, inst.pencil.b) = diag_c(inst.pencil.lambda1);
        block.bottomRightCorner(m, m) = N;
        const Cmat Sigma =
            herm(Sinvh * (Cinv.adjoint() * block * Cinv - Cmat::Identity(n, n)) * Sinvh);
        const Cmat HH = herm(inst.ch.H1.adjoint() * inst.ch.H1);
        if (!loewner_leq(Cmat::Zero(n, n), Sigma, 1e-8)) ok = false;
        if (!loewner_leq(Sigma, HH, 1e-8)) ok = false;

        const Cmat Kx = optimal_kx(inst.pencil, inst.S);
        const double val = logdet2_i_plus_psd(herm(sqrt_psd(Kx) * Sigma * sqrt_psd(Kx)));
        if (std::abs(val - lemma2_value(inst.pencil)) > 1e-7) ok = false;

        Cmat bad = block;
        const Cmat Mblk = 1e-2 * random_matrix(rng, inst.pencil.b, m);
        bad.topRightCorner(inst.pencil.b, m) = Mblk;
        bad.bottomLeftCorner(m, inst.pencil.b) = Mblk.adjoint();
        const Cmat SigmaBad =
            herm(Sinvh * (Cinv.adjoint() * bad * Cinv - Cmat::Identity(n, n)) * Sinvh);
        if (!loewner_leq(SigmaBad, HH, 1e-8)) ++breaks;
    }
    if (breaks < (reps * 95) / 100) ok = false;
    report(4, ok, "admissible-range structure and off-block necessity over 100 instances");
}

// closed-form jammer design end to end
void criterion_5() {
    Rng rng(derive_key(1005, 0, 0));
    bool ok = true;
    for (int rep = 0; rep < 100; ++rep) {
        // nh = min(nr, nt) with 0 < b < nh, so nonzero invisible jamming exists
        Instance inst = make_active(rng, 3, 3, 3, 3, 1.0, 1.0);
        const double Ph = 2.0 + 8.0 * rng.uniform();
        PowerBudget budget{inst.S, Ph, inst.S.trace().real()};
        DesignOutcome out = design_jammer(inst.ch, budget);
        if (out.design.case_tag != CaseTag::Case1 || !out.design.power_met) {
            ok = false;
            continue;
        }
        const Cmat& Kw = out.design.Kw;
        if (min_eig(Kw) < -1e-9 * (1.0 + Kw.norm())) ok = false;
        if (std::abs(Kw.trace().real() - Ph) > 1e-5 * Ph) ok = false;

        const Eigen::Index n = inst.ch.nt();
        const Cmat W = (Cmat::Identity(inst.ch.nr(), inst.ch.nr()) +
                        inst.ch.G2 * Kw * inst.ch.G2.adjoint()).inverse();
        const Cmat lhs = herm(inst.ch.H1.adjoint() * W * inst.ch.H1);
        const Cmat Sinvh = sqrt_psd(inst.S).inverse();
        const Cmat Cinv = inst.pencil.C.inverse();
        Cmat block = Cmat::Zero(n, n);
        block.topLeftCorner(inst.pencil.b, inst.pencil.b) = diag_c(inst.pencil.lambda1);
        block.bottomRightCorner(n - inst.pencil.b, n - inst.pencil.b) = out.design.N;
        const Cmat rhs =
            herm(Sinvh * (Cinv.adjoint() * block * Cinv - Cmat::Identity(n, n)) * Sinvh);
        if ((lhs - rhs).norm() > 1e-7 * (1.0 + rhs.norm())) ok = false;

        const Cmat Kx = optimal_kx(inst.pencil, inst.S);
        const double with = mutual_info_receiver(inst.ch, Kx, Kw);
        const double without =
            mutual_info_receiver(inst.ch, Kx, Cmat::Zero(inst.ch.nh(), inst.ch.nh()));
        if (std::abs(with - without) > 1e-6 * (1.0 + std::abs(without))) ok = false;
    }
    report(5, ok, "closed-form jammer design over 100 small-helper instances");
}

// nullspace + waterfilling design end to end
void criterion_6() {
    Rng rng(derive_key(1006, 0, 0));
    bool ok = true;
    for (int rep = 0; rep < 100; ++rep) {
        const Eigen::Index nt = 2 + static_cast<Eigen::Index>(rng.next_u64() % 2);
        const Eigen::Index nr = 2 + static_cast<Eigen::Index>(rng.next_u64() % 2);
        const Eigen::Index nh = std::min(nt, nr) + 1 +
                                static_cast<Eigen::Index>(rng.next_u64() % 2);
        ChannelSet ch = random_channels(rng, nt, nr, 2, nh, 1.0, 1.0);
        const Cmat S = random_hpd(rng, nt, 0.5, 5.0);
        const double Ph = 2.0 + 8.0 * rng.uniform();
        PowerBudget budget{S, Ph, S.trace().real()};
        DesignOutcome out = design_jammer(ch, budget);
        if (out.design.case_tag != CaseTag::Case2) {
            ok = false;
            continue;
        }
        if (!out.design.diagnostic.empty()) continue;  // degenerate nullspace, Kw = 0

        PencilDecomposition pencil = effective_pencil(ch, S, Cmat::Zero(nh, nh));
        const Cmat Kx = optimal_kx(pencil, S);
        const Cmat M = sqrt_psd(Kx) * ch.H1.adjoint() * ch.G2;
        if ((M * out.design.Gamma).norm() > 1e-8 * (1.0 + M.norm())) ok = false;
        if (std::abs(out.design.Kw.trace().real() - Ph) > 1e-9 * Ph) ok = false;

        const double with = mutual_info_receiver(ch, Kx, out.design.Kw);
        const double without = mutual_info_receiver(ch, Kx, Cmat::Zero(nh, nh));
        if (std::abs(with - without) > 1e-6 * (1.0 + std::abs(without))) ok = false;

        if (nh > nr) {
            try {
                JammerDesign base = nullspace_baseline_kw(ch, Ph);
                const double base_rate = capacity_given_kw(ch, S, base.Kw);
                if (out.rate_with_helper < base_rate - 1e-6) ok = false;
            } catch (const EmptyNullspace&) {
            }
        }
    }
    report(6, ok, "nullspace + waterfilling design over 100 large-helper instances");
}

// fixed transmitter-side channels with zero stand-alone capacity
void criterion_8() {
    Rng rng(derive_key(1008, 0, 0));
    bool ok = true;
    const Cmat H1 = fig4_h1();
    const Cmat G1 = fig4_g1();
    if (!loewner_leq(herm(H1.adjoint() * H1), herm(G1.adjoint() * G1), 1e-9)) ok = false;

    ChannelSet ch;
    ch.H1 = H1;
    ch.G1 = G1;
    ch.H2 = Cmat::Zero(3, 1);
    ch.G2 = Cmat::Zero(2, 1);
    for (int rep = 0; rep < 50; ++rep) {
        const Cmat S = random_psd(rng, 3, 20.0);
        if (capacity_given_kw(ch, S, Cmat::Zero(1, 1)) != 0.0) ok = false;
    }

    for (double ph : {10.0, 50.0}) {
        std::vector<TrialRecord> recs;
        auto rows = run_fig4({ph}, 20, 1008, 1, 24, 1.0, 1.0, &recs);
        if (rows.size() != 1 || !(rows[0].mean_with > 0.0)) ok = false;
        g_records.insert(g_records.end(), recs.begin(), recs.end());
    }
    report(8, ok, "fixed-channel scenario: zero stand-alone capacity, positive helped rate");
}

// search matches the waterfilling oracle when there is no eavesdropper
void criterion_9() {
    Rng rng(derive_key(1009, 0, 0));
    ChannelSet ch = random_channels(rng, 3, 3, 2, 2);
    ch.G1 = Cmat::Zero(2, 3);
    PowerBudget budget;
    budget.Pt = 8.0;
    budget.Ph = 0.0;
    SearchReport rep = search_s(ch, budget, 2000, 1009);

    HermitianEig e = eig_hermitian(herm(ch.H1.adjoint() * ch.H1));
    std::vector<double> g;
    for (Eigen::Index i = 0; i < e.values.size(); ++i)
        if (e.values(i) > 1e-12) g.push_back(e.values(i));
    double oracle = 0.0;
    for (size_t k = g.size(); k >= 1; --k) {
        double inv = 0.0;
        for (size_t i = 0; i < k; ++i) inv += 1.0 / g[i];
        const double mu = (budget.Pt + inv) / static_cast<double>(k);
        if (mu > 1.0 / g[k - 1]) {
            for (size_t i = 0; i < k; ++i) oracle += std::log2(mu * g[i]);
            break;
        }
    }
    report(9, rep.rate_best >= 0.98 * oracle && rep.rate_best <= oracle + 1e-6,
           "search within 2% of the waterfilling capacity without eavesdropper");
}

ExperimentConfig trend_config() {
    ExperimentConfig cfg;
    cfg.mode = Mode::SweepNh;
    cfg.nt = 3;
    cfg.nr = 3;
    cfg.ne = 3;
    cfg.pt = 10.0;
    cfg.ph = 10.0;
    cfg.trials = 100;
    cfg.seed = 1010;
    cfg.s_policy = SPolicy::Isotropic;
    cfg.nh_list = {1, 5};
    return cfg;
}

std::string trend_csv() {
    std::vector<TrialRecord> recs;
    auto rows = run_sweep(trend_config(), &recs);
    g_records.insert(g_records.end(), recs.begin(), recs.end());

    bool ok = rows.size() == 2;
    if (ok) {
        const double gap = rows[1].mean_with - rows[0].mean_with;
        const double se = std::sqrt(rows[0].std_err * rows[0].std_err +
                                    rows[1].std_err * rows[1].std_err);
        ok = gap > 2.0 * se;
    }
    report(10, ok, "mean rate grows with helper antennas by more than two standard errors");
    return csv_from_rows(rows);
}

void criterion_7() {
    // top up the pool past 500 trials with a mixed power sweep
    ExperimentConfig cfg;
    cfg.mode = Mode::SweepPh;
    cfg.p_total = 20.0;
    cfg.ph_grid = {0.0, 4.0, 8.0, 12.0};
    cfg.trials = 70;
    cfg.seed = 1007;
    cfg.s_policy = SPolicy::Isotropic;
    std::vector<TrialRecord> recs;
    run_sweep(cfg, &recs);
    g_records.insert(g_records.end(), recs.begin(), recs.end());

    bool ok = g_records.size() >= 500;
    for (const TrialRecord& r : g_records)
        if (r.rate_with_helper < r.rate_no_helper - 1e-8) ok = false;
    report(7, ok,
           "never-lose across " + std::to_string(g_records.size()) + " pooled trials");
}

void criterion_11(const std::string& trend_first) {
    bool ok = csv_from_rows(run_sweep(trend_config())) == trend_first;
    auto rows_a = run_fig4({10.0, 50.0}, 10, 11, 1, 16, 1.0, 1.0);
    auto rows_b = run_fig4({10.0, 50.0}, 10, 11, 1, 16, 1.0, 1.0);
    if (csv_from_rows(rows_a) != csv_from_rows(rows_b)) ok = false;
    report(11, ok, "repeated runs with the same seed give byte-identical CSV");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_8();
    criterion_9();
    const std::string trend = trend_csv();  // prints criterion 10
    criterion_7();
    criterion_11(trend);
    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
