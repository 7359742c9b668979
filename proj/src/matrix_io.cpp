#include "wiretap/matrix_io.hpp"

#include <fstream>

namespace wiretap {

using nlohmann::json;

json matrix_to_json(const Cmat& M) {
    json data = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            data.push_back({M(i, j).real(), M(i, j).imag()});
    return json{{"rows", M.rows()}, {"cols", M.cols()}, {"data", std::move(data)}};
}

Cmat matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ConfigError("matrix JSON must have rows, cols, data");
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    if (rows < 0 || cols < 0) throw ConfigError("matrix dimensions must be nonnegative");
    const auto& data = j.at("data");
    if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols)
        throw ConfigError("matrix data length must equal rows*cols");
    Cmat M(rows, cols);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j2 = 0; j2 < cols; ++j2, ++k) {
            const auto& e = data[static_cast<size_t>(k)];
            if (!e.is_array() || e.size() != 2)
                throw ConfigError("matrix entries must be [re, im] pairs");
            M(i, j2) = Complex(e[0].get<double>(), e[1].get<double>());
        }
    return M;
}

json channels_to_json(const ChannelSet& ch) {
    return json{{"H1", matrix_to_json(ch.H1)},
                {"G1", matrix_to_json(ch.G1)},
                {"H2", matrix_to_json(ch.H2)},
                {"G2", matrix_to_json(ch.G2)}};
}

ChannelSet channels_from_json(const json& j) {
    for (const char* key : {"H1", "G1", "H2", "G2"})
        if (!j.contains(key)) throw ConfigError(std::string("channel file missing ") + key);
    ChannelSet ch;
    ch.H1 = matrix_from_json(j.at("H1"));
    ch.G1 = matrix_from_json(j.at("G1"));
    ch.H2 = matrix_from_json(j.at("H2"));
    ch.G2 = matrix_from_json(j.at("G2"));
    try {
        ch.validate();
    } catch (const DimensionMismatch& e) {
        throw ConfigError(e.what());
    }
    return ch;
}

void config_from_json(const json& j, ExperimentConfig& cfg) {
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("nt", cfg.nt);
    get("nr", cfg.nr);
    get("ne", cfg.ne);
    get("nh", cfg.nh);
    get("sigma_d2", cfg.sigma_d2);
    get("sigma_c2", cfg.sigma_c2);
    get("p_total", cfg.p_total);
    get("pt", cfg.pt);
    get("ph", cfg.ph);
    get("trials", cfg.trials);
    get("seed", cfg.seed);
    get("eval_budget", cfg.eval_budget);
    get("nh_split", cfg.nh_split);
    if (j.contains("mode")) cfg.mode = mode_from_string(j.at("mode").get<std::string>());
    if (j.contains("s_policy"))
        cfg.s_policy = s_policy_from_string(j.at("s_policy").get<std::string>());
    if (j.contains("ph_grid")) cfg.ph_grid = j.at("ph_grid").get<std::vector<double>>();
    if (j.contains("nh_list")) {
        cfg.nh_list.clear();
        for (const auto& v : j.at("nh_list")) cfg.nh_list.push_back(v.get<Eigen::Index>());
    }
}

namespace {
json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}
}  // namespace

ChannelSet load_channels(const std::string& path) { return channels_from_json(parse_file(path)); }

void load_config(const std::string& path, ExperimentConfig& cfg) {
    config_from_json(parse_file(path), cfg);
}

}  // namespace wiretap
