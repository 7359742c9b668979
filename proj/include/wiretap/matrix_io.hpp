#pragma once

// JSON (de)serialization for complex matrices, channel files, and the
// experiment configuration. Matrix format:
//   {"rows": n, "cols": m, "data": [[re, im], ...]}   (row-major)

#include "wiretap/experiment.hpp"

#include <json.hpp>

#include <string>

namespace wiretap {

nlohmann::json matrix_to_json(const Cmat& M);
Cmat matrix_from_json(const nlohmann::json& j);

// Channel file: an object with keys "H1", "G1", "H2", "G2".
nlohmann::json channels_to_json(const ChannelSet& ch);
ChannelSet channels_from_json(const nlohmann::json& j);

// Keys mirror the CLI flags (nt, nr, ne, nh, sigma_d2, sigma_c2, pt, ph,
// p_total, trials, seed, eval_budget, mode, s_policy, ph_grid, nh_list,
// nh_split); absent keys keep the defaults already in cfg.
void config_from_json(const nlohmann::json& j, ExperimentConfig& cfg);

ChannelSet load_channels(const std::string& path);
void load_config(const std::string& path, ExperimentConfig& cfg);

}  // namespace wiretap
