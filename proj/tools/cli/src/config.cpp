#include "coase/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace coase::cli {

using nlohmann::json;

namespace {

Belief prior_of(double mu0) {
  try {
    return Belief(mu0);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <class T>
void take(const json& j, const char* key, T& into) {
  if (j.contains(key)) into = j.at(key).get<T>();
}

}  // namespace

void RunConfig::validate() const {
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (params.mu0.certain_high()) throw ConfigError("mu0 must be below 1");
  if (grid_n < 2) throw ConfigError("grid_n must be at least 2");
  if (mc_paths == 0) throw ConfigError("mc_paths must be positive");
  if (n_priors == 0) throw ConfigError("n_priors must be positive");
  if (horizon == 0) throw ConfigError("horizon must be positive");
  if (value_grid == 0) throw ConfigError("value_grid must be positive");
  if (!(tolerances.scan > 0.0) || !(tolerances.residual > 0.0)) {
    throw ConfigError("tolerances must be positive");
  }
}

RunConfig config_from_json(const std::string& text, RunConfig base) {
  RunConfig cfg = std::move(base);
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown(j,
                   {"params", "grid_n", "mc_paths", "seed", "tolerances", "output_dir", "n_priors", "type_draw",
                    "horizon", "value_grid", "paths_csv"},
                   "config");
    if (j.contains("params")) {
      const json& p = j.at("params");
      reject_unknown(p, {"v_low", "v_high", "delta", "mu0"}, "params");
      take(p, "v_low", cfg.params.v_low);
      take(p, "v_high", cfg.params.v_high);
      take(p, "delta", cfg.params.delta);
      if (p.contains("mu0")) cfg.params.mu0 = prior_of(p.at("mu0").get<double>());
    }
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      reject_unknown(t, {"scan", "residual"}, "tolerances");
      take(t, "scan", cfg.tolerances.scan);
      take(t, "residual", cfg.tolerances.residual);
    }
    take(j, "grid_n", cfg.grid_n);
    take(j, "mc_paths", cfg.mc_paths);
    take(j, "seed", cfg.seed);
    take(j, "n_priors", cfg.n_priors);
    take(j, "horizon", cfg.horizon);
    take(j, "value_grid", cfg.value_grid);
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("paths_csv")) cfg.paths_csv = j.at("paths_csv").get<std::string>();
    if (j.contains("type_draw")) cfg.type_draw = parse_type_draw(j.at("type_draw").get<std::string>());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig resolve_config(const Overrides& flags) {
  RunConfig cfg;
  if (flags.config) {
    std::ifstream in(*flags.config);
    if (!in) throw ConfigError("cannot read config file " + flags.config->string());
    std::stringstream text;
    text << in.rdbuf();
    cfg = config_from_json(text.str(), cfg);
  }
  if (flags.v_low) cfg.params.v_low = *flags.v_low;
  if (flags.v_high) cfg.params.v_high = *flags.v_high;
  if (flags.delta) cfg.params.delta = *flags.delta;
  if (flags.mu0) cfg.params.mu0 = prior_of(*flags.mu0);
  if (flags.grid_n) cfg.grid_n = *flags.grid_n;
  if (flags.mc_paths) cfg.mc_paths = *flags.mc_paths;
  if (flags.n_priors) cfg.n_priors = *flags.n_priors;
  if (flags.horizon) cfg.horizon = *flags.horizon;
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.output_dir) cfg.output_dir = *flags.output_dir;
  if (flags.paths_csv) cfg.paths_csv = *flags.paths_csv;
  if (flags.type_draw) {
    try {
      cfg.type_draw = parse_type_draw(*flags.type_draw);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  cfg.validate();
  return cfg;
}

}  // namespace coase::cli
