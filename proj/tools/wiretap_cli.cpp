// Command-line simulator for helper-assisted MIMO wiretap secrecy rates.
//
// Subcommands: capacity, design, sweep-ph, sweep-nh, fig4.
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include "wiretap/matrix_io.hpp"
#include "wiretap/rng.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace wiretap;

struct CliOptions {
    ExperimentConfig cfg;
    std::string config_path;
    std::string channels_path;
    std::string out_path;
    std::string s_policy = "";
    std::string mode;
    std::vector<double> ph_grid;
    std::vector<long long> nh_list;
};

void add_common(CLI::App* sub, CliOptions& opt) {
    sub->add_option("--config", opt.config_path, "JSON config file");
    sub->add_option("--seed", opt.cfg.seed, "master RNG seed");
    sub->add_option("--trials", opt.cfg.trials, "Monte-Carlo trials per point");
    sub->add_option("--out", opt.out_path, "output path (default stdout)");
    sub->add_option("--eval-budget", opt.cfg.eval_budget, "S-search evaluations per trial");
    sub->add_option("--nt", opt.cfg.nt, "transmitter antennas");
    sub->add_option("--nr", opt.cfg.nr, "receiver antennas");
    sub->add_option("--ne", opt.cfg.ne, "eavesdropper antennas");
    sub->add_option("--nh", opt.cfg.nh, "helper antennas");
    sub->add_option("--pt", opt.cfg.pt, "transmitter power budget");
    sub->add_option("--ph", opt.cfg.ph, "helper power budget");
    sub->add_option("--p-total", opt.cfg.p_total, "total power Pt + Ph");
    sub->add_option("--sigma-d2", opt.cfg.sigma_d2, "variance of H1/G2 entries");
    sub->add_option("--sigma-c2", opt.cfg.sigma_c2, "variance of G1/H2 entries");
    sub->add_option("--s-policy", opt.s_policy, "search|isotropic");
    sub->add_option("--channels", opt.channels_path, "channel JSON file (overrides random draw)");
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + out_path);
    out << text;
}

ChannelSet trial_channels(const CliOptions& opt, int trial) {
    if (!opt.channels_path.empty()) return load_channels(opt.channels_path);
    return gen_rayleigh(opt.cfg, trial);
}

int run_design(const CliOptions& opt) {
    ChannelSet ch = trial_channels(opt, 0);
    if (opt.cfg.pt <= 0.0) throw ConfigError("design requires --pt > 0");
    PowerBudget budget;
    budget.Ph = opt.cfg.ph;
    budget.Pt = opt.cfg.pt;
    if (opt.cfg.s_policy == SPolicy::Search) {
        SearchReport rep = search_s(ch, budget, opt.cfg.eval_budget, opt.cfg.seed);
        budget.S = rep.S_best;
    } else {
        budget.S = (opt.cfg.pt / static_cast<double>(ch.nt())) *
                   Cmat::Identity(ch.nt(), ch.nt());
    }
    DesignOutcome outcome = design_jammer(ch, budget);

    nlohmann::json j;
    j["case_tag"] = to_string(outcome.design.case_tag);
    j["rate_no_helper"] = outcome.rate_no_helper;
    j["rate_with_helper"] = outcome.rate_with_helper;
    j["trace_kw"] = outcome.design.Kw.trace().real();
    j["power_met"] = outcome.design.power_met;
    if (!outcome.design.diagnostic.empty()) j["diagnostic"] = outcome.design.diagnostic;
    if (outcome.design.case_tag == CaseTag::Case1) j["t"] = outcome.design.t;
    if (outcome.design.case_tag == CaseTag::Case2) j["eta"] = outcome.design.eta;
    j["S"] = matrix_to_json(budget.S);
    j["Kx"] = matrix_to_json(outcome.Kx_updated);
    j["Kw"] = matrix_to_json(outcome.design.Kw);
    emit(opt.out_path, j.dump(2) + "\n");
    return 0;
}

// Capacity of a fixed injected channel set; trials vary only the search seed.
int run_fixed_capacity(const CliOptions& opt) {
    ChannelSet ch = load_channels(opt.channels_path);
    if (opt.cfg.pt <= 0.0) throw ConfigError("capacity with --channels requires --pt > 0");
    if (opt.cfg.ph < 0.0) throw ConfigError("--ph must be >= 0");

    SweepRow row;
    row.sweep_value = opt.cfg.ph;
    std::vector<double> with;
    for (int trial = 0; trial < opt.cfg.trials; ++trial) {
        PowerBudget budget;
        budget.Pt = opt.cfg.pt;
        budget.Ph = opt.cfg.ph;
        if (opt.cfg.s_policy == SPolicy::Search) {
            SearchReport rep =
                search_s(ch, budget, opt.cfg.eval_budget, derive_key(opt.cfg.seed, trial, 50));
            budget.S = rep.S_best;
        } else {
            budget.S = (opt.cfg.pt / static_cast<double>(ch.nt())) *
                       Cmat::Identity(ch.nt(), ch.nt());
        }
        DesignOutcome outcome = design_jammer(ch, budget);
        with.push_back(outcome.rate_with_helper);
        row.mean_without += outcome.rate_no_helper;
        ++row.case_histogram[to_string(outcome.design.case_tag)];
    }
    row.trials = opt.cfg.trials;
    for (double r : with) row.mean_with += r;
    row.mean_with /= row.trials;
    row.mean_without /= row.trials;
    if (row.trials > 1) {
        double ss = 0.0;
        for (double r : with) ss += (r - row.mean_with) * (r - row.mean_with);
        row.std_err = std::sqrt(ss / (row.trials - 1)) / std::sqrt(double(row.trials));
    }
    emit(opt.out_path, csv_from_rows({row}));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MIMO wiretap channel secrecy simulator with a cooperative jammer"};
    app.require_subcommand(1);

    CliOptions opt;
    auto* cap = app.add_subcommand("capacity", "mean secrecy rate at a fixed (pt, ph)");
    auto* des = app.add_subcommand("design", "design Kx/Kw for one channel instance");
    auto* sph = app.add_subcommand("sweep-ph", "sweep helper power, Pt + Ph fixed");
    auto* snh = app.add_subcommand("sweep-nh", "sweep helper antenna count");
    auto* fg4 = app.add_subcommand("fig4", "fixed-H1/G1 zero-capacity scenario sweep");
    for (auto* sub : {cap, des, sph, snh, fg4}) add_common(sub, opt);
    sph->add_option("--ph-grid", opt.ph_grid, "helper power grid values")->delimiter(',');
    fg4->add_option("--ph-grid", opt.ph_grid, "helper power grid values")->delimiter(',');
    snh->add_option("--nh-list", opt.nh_list, "helper antenna counts")->delimiter(',');
    fg4->add_option("--nh-split", opt.cfg.nh_split, "helper antennas out of 3 (1 or 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        // Config file supplies defaults; command-line flags override it.
        if (!opt.config_path.empty()) {
            ExperimentConfig from_file;
            load_config(opt.config_path, from_file);
            ExperimentConfig defaults;
            auto keep = [&](auto& field, const auto& flag_value, const auto& default_value) {
                field = (flag_value == default_value) ? field : flag_value;
            };
            ExperimentConfig merged = from_file;
            keep(merged.nt, opt.cfg.nt, defaults.nt);
            keep(merged.nr, opt.cfg.nr, defaults.nr);
            keep(merged.ne, opt.cfg.ne, defaults.ne);
            keep(merged.nh, opt.cfg.nh, defaults.nh);
            keep(merged.sigma_d2, opt.cfg.sigma_d2, defaults.sigma_d2);
            keep(merged.sigma_c2, opt.cfg.sigma_c2, defaults.sigma_c2);
            keep(merged.p_total, opt.cfg.p_total, defaults.p_total);
            keep(merged.pt, opt.cfg.pt, defaults.pt);
            keep(merged.ph, opt.cfg.ph, defaults.ph);
            keep(merged.trials, opt.cfg.trials, defaults.trials);
            keep(merged.seed, opt.cfg.seed, defaults.seed);
            keep(merged.eval_budget, opt.cfg.eval_budget, defaults.eval_budget);
            keep(merged.nh_split, opt.cfg.nh_split, defaults.nh_split);
            opt.cfg = merged;
        }
        if (!opt.s_policy.empty()) opt.cfg.s_policy = s_policy_from_string(opt.s_policy);
        if (!opt.ph_grid.empty()) opt.cfg.ph_grid = opt.ph_grid;
        if (!opt.nh_list.empty()) {
            opt.cfg.nh_list.clear();
            for (long long v : opt.nh_list) opt.cfg.nh_list.push_back(v);
        }

        if (cap->parsed()) opt.cfg.mode = Mode::Capacity;
        if (des->parsed()) opt.cfg.mode = Mode::Design;
        if (sph->parsed()) opt.cfg.mode = Mode::SweepPh;
        if (snh->parsed()) opt.cfg.mode = Mode::SweepNh;
        if (fg4->parsed()) opt.cfg.mode = Mode::Fig4;

        if (opt.cfg.mode == Mode::Design) return run_design(opt);

        if (!opt.channels_path.empty() && opt.cfg.mode == Mode::Capacity)
            return run_fixed_capacity(opt);
        opt.cfg.validate();
        std::vector<SweepRow> rows = run_sweep(opt.cfg);
        emit(opt.out_path, csv_from_rows(rows));
        return 0;
    } catch (const wiretap::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const wiretap::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
