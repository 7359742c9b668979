#pragma once

// Seeded Monte-Carlo harness: Rayleigh channel generation, trial
// orchestration over power / antenna sweeps, and CSV emission.

#include "wiretap/power_search.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wiretap {

enum class Mode { Capacity, Design, SweepPh, SweepNh, Fig4 };
enum class SPolicy { Search, Isotropic };

Mode mode_from_string(const std::string& s);
SPolicy s_policy_from_string(const std::string& s);

struct ExperimentConfig {
    Eigen::Index nt = 2, nr = 2, ne = 2, nh = 2;
    double sigma_d2 = 1.0;  // variance of H1, G2 entries
    double sigma_c2 = 1.0;  // variance of G1, H2 entries
    double p_total = 0.0;   // sweep-ph / fig4: Pt + Ph fixed
    double pt = 0.0;
    double ph = 0.0;
    int trials = 100;
    std::uint64_t seed = 1;
    int eval_budget = 200;
    Mode mode = Mode::Capacity;
    SPolicy s_policy = SPolicy::Search;
    std::vector<double> ph_grid;
    std::vector<Eigen::Index> nh_list;
    int nh_split = 1;  // fig4: helper antennas out of the 3 total

    void validate() const;
};

struct TrialRecord {
    int trial = 0;
    std::uint64_t seed_used = 0;
    double rate_no_helper = 0.0;
    double rate_with_helper = 0.0;
    CaseTag case_tag = CaseTag::Zero;
    double t_or_eta = 0.0;
    double trace_kw = 0.0;
    double wall_seconds = 0.0;
};

struct SweepRow {
    double sweep_value = 0.0;
    double mean_with = 0.0;
    double mean_without = 0.0;
    double std_err = 0.0;  // of the with-helper mean
    int trials = 0;
    std::map<std::string, int> case_histogram;
};

// Per-trial channel draw; depends only on (cfg.seed, trial), not on prior
// calls. H1/G2 carry sigma_d2, G1/H2 carry sigma_c2.
ChannelSet gen_rayleigh(const ExperimentConfig& cfg, int trial);

// The fixed transmitter-side channels of the zero-capacity scenario
// (2 x 3 and 3 x 3; columns truncated to nt when fewer transmit antennas
// are used).
Cmat fig4_h1();
Cmat fig4_g1();

// Sweep of the helper power grid for the fixed-H1/G1 scenario with
// Pt + Ph = 110 and nt + nh = 3. nh_split selects the antenna split.
std::vector<SweepRow> run_fig4(const std::vector<double>& ph_grid, int trials,
                               std::uint64_t seed, int nh_split, int eval_budget,
                               double sigma_d2, double sigma_c2,
                               std::vector<TrialRecord>* records = nullptr);

// Ph-grid or nh-list sweep per cfg.mode; one row per sweep value.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg,
                                std::vector<TrialRecord>* records = nullptr);

// CSV with a header row, '.' decimal separator, 6 significant digits.
std::string csv_from_rows(const std::vector<SweepRow>& rows);

}  // namespace wiretap
