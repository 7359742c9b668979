#include "wiretap/experiment.hpp"

#include "wiretap/rng.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

namespace wiretap {

namespace {

// Substream roles for channel draws.
enum : std::uint64_t { kRoleH1 = 1, kRoleG1 = 2, kRoleH2 = 3, kRoleG2 = 4, kRoleSearch = 50 };

std::string fmt6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

TrialRecord run_trial(const ChannelSet& ch, double pt, double ph, SPolicy policy,
                      int eval_budget, std::uint64_t seed, int trial) {
    const auto start = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.trial = trial;
    rec.seed_used = seed;

    DesignOutcome outcome;
    if (policy == SPolicy::Isotropic || ch.nt() == 0) {
        PowerBudget budget;
        budget.S = (pt / static_cast<double>(ch.nt())) * Cmat::Identity(ch.nt(), ch.nt());
        budget.Ph = ph;
        budget.Pt = pt;
        outcome = design_jammer(ch, budget);
    } else {
        PowerBudget budget;
        budget.Ph = ph;
        budget.Pt = pt;
        SearchReport rep =
            search_s(ch, budget, eval_budget,
                     derive_key(seed, static_cast<std::uint64_t>(trial), kRoleSearch));
        budget.S = rep.S_best;
        outcome = design_jammer(ch, budget);
    }

    rec.rate_no_helper = outcome.rate_no_helper;
    rec.rate_with_helper = outcome.rate_with_helper;
    rec.case_tag = outcome.design.case_tag;
    rec.t_or_eta = outcome.design.case_tag == CaseTag::Case1 ? outcome.design.t
                                                             : outcome.design.eta;
    rec.trace_kw = outcome.design.Kw.size() > 0 ? outcome.design.Kw.trace().real() : 0.0;
    rec.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

SweepRow aggregate(double sweep_value, const std::vector<TrialRecord>& recs) {
    SweepRow row;
    row.sweep_value = sweep_value;
    row.trials = static_cast<int>(recs.size());
    double sw = 0.0, swo = 0.0;
    for (const auto& r : recs) {
        sw += r.rate_with_helper;
        swo += r.rate_no_helper;
        row.case_histogram[to_string(r.case_tag)] += 1;
    }
    const double n = static_cast<double>(row.trials);
    row.mean_with = sw / n;
    row.mean_without = swo / n;
    if (row.trials > 1) {
        double ss = 0.0;
        for (const auto& r : recs) {
            const double d = r.rate_with_helper - row.mean_with;
            ss += d * d;
        }
        row.std_err = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return row;
}

}  // namespace

Mode mode_from_string(const std::string& s) {
    if (s == "capacity") return Mode::Capacity;
    if (s == "design") return Mode::Design;
    if (s == "sweep-ph") return Mode::SweepPh;
    if (s == "sweep-nh") return Mode::SweepNh;
    if (s == "fig4") return Mode::Fig4;
    throw ConfigError("unknown mode: " + s);
}

SPolicy s_policy_from_string(const std::string& s) {
    if (s == "search") return SPolicy::Search;
    if (s == "isotropic") return SPolicy::Isotropic;
    throw ConfigError("unknown s-policy: " + s);
}

void ExperimentConfig::validate() const {
    if (nt < 1 || nr < 1 || ne < 1 || nh < 1)
        throw ConfigError("antenna counts must be positive");
    if (trials < 1) throw ConfigError("trials must be >= 1");
    if (eval_budget < 1) throw ConfigError("eval_budget must be >= 1");
    if (sigma_d2 < 0.0 || sigma_c2 < 0.0) throw ConfigError("variances must be nonnegative");
    switch (mode) {
        case Mode::SweepPh:
            if (p_total <= 0.0) throw ConfigError("sweep-ph requires p_total > 0");
            if (ph_grid.empty()) throw ConfigError("sweep-ph requires a ph grid");
            for (double v : ph_grid)
                if (v < 0.0 || v >= p_total) throw ConfigError("ph grid values must lie in [0, p_total)");
            break;
        case Mode::SweepNh:
            if (nh_list.empty()) throw ConfigError("sweep-nh requires an nh list");
            if (pt <= 0.0) throw ConfigError("sweep-nh requires pt > 0");
            break;
        case Mode::Fig4:
            if (nh_split != 1 && nh_split != 2) throw ConfigError("fig4 nh split must be 1 or 2");
            if (ph_grid.empty()) throw ConfigError("fig4 requires a ph grid");
            break;
        default:
            if (pt <= 0.0) throw ConfigError("pt must be positive");
            break;
    }
}

ChannelSet gen_rayleigh(const ExperimentConfig& cfg, int trial) {
    const auto tr = static_cast<std::uint64_t>(trial);
    ChannelSet ch;
    {
        Rng r(derive_key(cfg.seed, tr, kRoleH1));
        ch.H1 = r.cnormal_matrix(cfg.nr, cfg.nt, cfg.sigma_d2);
    }
    {
        Rng r(derive_key(cfg.seed, tr, kRoleG1));
        ch.G1 = r.cnormal_matrix(cfg.ne, cfg.nt, cfg.sigma_c2);
    }
    {
        Rng r(derive_key(cfg.seed, tr, kRoleH2));
        ch.H2 = r.cnormal_matrix(cfg.ne, cfg.nh, cfg.sigma_c2);
    }
    {
        Rng r(derive_key(cfg.seed, tr, kRoleG2));
        ch.G2 = r.cnormal_matrix(cfg.nr, cfg.nh, cfg.sigma_d2);
    }
    return ch;
}

Cmat fig4_h1() {
    Cmat H(2, 3);
    H << Complex(-0.25, 0.5), Complex(-0.35, 0.0), Complex(-1.25, -0.9),
        Complex(-0.4, 0.1), Complex(-0.2, 0.75), Complex(0.0, -1.0);
    return H;
}

Cmat fig4_g1() {
    Cmat G(3, 3);
    G << Complex(2.0, 0.25), Complex(1.5, 0.5), Complex(0.0, 2.0),
        Complex(0.25, 0.25), Complex(-0.7, 1.5), Complex(0.5, 0.33),
        Complex(-1.5, 0.0), Complex(-0.5, -1.0), Complex(0.0, -2.9);
    return G;
}

std::vector<SweepRow> run_fig4(const std::vector<double>& ph_grid, int trials,
                               std::uint64_t seed, int nh_split, int eval_budget,
                               double sigma_d2, double sigma_c2,
                               std::vector<TrialRecord>* records) {
    if (nh_split != 1 && nh_split != 2) throw ConfigError("run_fig4: nh split must be 1 or 2");
    if (trials < 1) throw ConfigError("run_fig4: trials must be >= 1");
    constexpr double kTotalPower = 110.0;
    const Eigen::Index nt = 3 - nh_split;
    const Eigen::Index nh = nh_split;

    ExperimentConfig draw;
    draw.nt = nt;
    draw.nr = 2;
    draw.ne = 3;
    draw.nh = nh;
    draw.sigma_d2 = sigma_d2;
    draw.sigma_c2 = sigma_c2;
    draw.seed = seed;

    std::vector<SweepRow> rows;
    for (double ph : ph_grid) {
        if (ph < 0.0 || ph >= kTotalPower)
            throw ConfigError("run_fig4: Ph grid values must lie in [0, 110)");
        const double pt = kTotalPower - ph;
        std::vector<TrialRecord> recs;
        recs.reserve(static_cast<size_t>(trials));
        for (int k = 0; k < trials; ++k) {
            ChannelSet ch = gen_rayleigh(draw, k);
            ch.H1 = fig4_h1().leftCols(nt);
            ch.G1 = fig4_g1().leftCols(nt);
            recs.push_back(run_trial(ch, pt, ph, SPolicy::Search, eval_budget, seed, k));
        }
        rows.push_back(aggregate(ph, recs));
        if (records) records->insert(records->end(), recs.begin(), recs.end());
    }
    return rows;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg, std::vector<TrialRecord>* records) {
    cfg.validate();
    std::vector<SweepRow> rows;

    auto sweep_point = [&](const ExperimentConfig& point_cfg, double sweep_value, double pt,
                           double ph) {
        std::vector<TrialRecord> recs;
        recs.reserve(static_cast<size_t>(point_cfg.trials));
        for (int k = 0; k < point_cfg.trials; ++k) {
            ChannelSet ch = gen_rayleigh(point_cfg, k);
            recs.push_back(run_trial(ch, pt, ph, point_cfg.s_policy, point_cfg.eval_budget,
                                     point_cfg.seed, k));
        }
        rows.push_back(aggregate(sweep_value, recs));
        if (records) records->insert(records->end(), recs.begin(), recs.end());
    };

    switch (cfg.mode) {
        case Mode::SweepPh:
            for (double ph : cfg.ph_grid) sweep_point(cfg, ph, cfg.p_total - ph, ph);
            break;
        case Mode::SweepNh:
            for (Eigen::Index nh : cfg.nh_list) {
                ExperimentConfig point = cfg;
                point.nh = nh;
                sweep_point(point, static_cast<double>(nh), cfg.pt, cfg.ph);
            }
            break;
        case Mode::Fig4:
            return run_fig4(cfg.ph_grid, cfg.trials, cfg.seed, cfg.nh_split, cfg.eval_budget,
                            cfg.sigma_d2, cfg.sigma_c2, records);
        default:
            sweep_point(cfg, cfg.ph, cfg.pt, cfg.ph);
            break;
    }
    return rows;
}

std::string csv_from_rows(const std::vector<SweepRow>& rows) {
    std::string out =
        "sweep_value,mean_rate_with_helper,mean_rate_no_helper,std_err,trials,case_tags\n";
    for (const auto& row : rows) {
        std::string hist;
        for (const auto& [tag, count] : row.case_histogram) {
            if (!hist.empty()) hist += '|';
            hist += tag + ':' + std::to_string(count);
        }
        out += fmt6(row.sweep_value) + ',' + fmt6(row.mean_with) + ',' + fmt6(row.mean_without) +
               ',' + fmt6(row.std_err) + ',' + std::to_string(row.trials) + ',' + hist + '\n';
    }
    return out;
}

}  // namespace wiretap
