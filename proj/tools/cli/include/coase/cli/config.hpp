#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "coase/market.hpp"
#include "coase/sim.hpp"

namespace coase::cli {

/// Bad user input: unreadable config, unknown keys, invalid parameters.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double scan = 1e-8;       ///< deviation gap, relative to v_high
  double residual = 1e-10;  ///< indifference residual, relative to v_high
};

struct RunConfig {
  MarketParams params;
  std::size_t grid_n = 1001;
  std::size_t mc_paths = 100000;
  std::uint64_t seed = 0;
  Tolerances tolerances;
  std::filesystem::path output_dir = ".";
  std::size_t n_priors = 101;
  TypeDraw type_draw = TypeDraw::Prior;
  std::size_t horizon = 1000;
  std::size_t value_grid = 1001;
  std::optional<std::filesystem::path> paths_csv;

  /// Throws ConfigError on non-positive counts or tolerances, invalid
  /// parameters, or a prior of 1.
  void validate() const;
};

/// Applies the keys of a JSON config (snake_case RunConfig field names,
/// params nested under "params") on top of `base`.
RunConfig config_from_json(const std::string& text, RunConfig base = {});

/// Command-line values; set fields win over the config file.
struct Overrides {
  std::optional<std::filesystem::path> config;
  std::optional<double> v_low, v_high, delta, mu0;
  std::optional<std::size_t> grid_n, mc_paths, n_priors, horizon;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> type_draw;
  std::optional<std::filesystem::path> output_dir, paths_csv;
};

/// Defaults, then the config file, then flags; validated.
RunConfig resolve_config(const Overrides& flags);

}  // namespace coase::cli
