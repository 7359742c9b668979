#pragma once

// Derivative-free outer maximization of the secrecy rate over the shaping
// matrix S under Tr(S) = Pt, evaluated through the full jammer-design
// pipeline. Deterministic given the seed.

#include "wiretap/jammer.hpp"

#include <cstdint>
#include <vector>

namespace wiretap {

struct SearchReport {
    Cmat S_best;
    double rate_best = 0.0;
    int evaluations = 0;
    bool converged = false;
    std::vector<std::pair<int, double>> history;  // (evaluation index, best so far)
};

// Candidate stream: isotropic S, an H1-waterfilled S, a pencil-aligned S,
// random trace-normalized restarts, then coordinate-wise refinement around
// the incumbent. budget.Pt must be positive; budget.S is ignored.
SearchReport search_s(const ChannelSet& ch, const PowerBudget& budget, int eval_budget,
                      std::uint64_t seed);

// One search per grid point with Pt = P_total - Ph.
std::vector<std::pair<double, double>> sweep_power_split(const ChannelSet& ch, double P_total,
                                                         const std::vector<double>& ph_grid,
                                                         int eval_budget, std::uint64_t seed);

}  // namespace wiretap
