#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coase/market.hpp"
#include "coase/value.hpp"

namespace coase {

/// SplitMix64 (Steele, Lea and Flood). Each Monte Carlo path draws from its
/// own stream seeded by mixing (seed, path index), so results do not depend
/// on the order paths are run in.
class SplitMix64 {
 public:
  static constexpr const char* kAlgorithm = "splitmix64/path-substream-v1";

  explicit constexpr SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static SplitMix64 for_path(std::uint64_t seed, std::uint64_t path_index) noexcept;

  std::uint64_t next() noexcept;

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class BuyerType { Low, High };
enum class Action { Accept, Reject };
enum class TypeDraw { FixedLow, FixedHigh, Prior };

struct PathStep {
  std::size_t period = 0;
  Belief belief;
  double price = 0.0;
  BuyerType buyer = BuyerType::Low;
  Action action = Action::Reject;
};

struct PathRecord {
  BuyerType buyer = BuyerType::Low;
  std::vector<PathStep> steps;
  std::optional<std::size_t> trade_period;  ///< empty when the horizon ran out
  double discounted_revenue = 0.0;
  double discounted_buyer_payoff = 0.0;
};

struct SimOptions {
  std::size_t horizon = 1000;  ///< periods simulated before a path is cut off
};

/// One play of the equilibrium price path from prior mu0. Each period the
/// seller posts the class price for the current belief; the high type
/// accepts with the probability that makes a rejection land exactly on the
/// next cutoff. Throws std::domain_error at mu0 = 1.
PathRecord simulate_path(const ValueSurface& s, Belief mu0, BuyerType buyer, SplitMix64& rng,
                         SimOptions opts = {});

struct MonteCarloSummary {
  std::size_t n_paths = 0;
  double mean_revenue = 0.0;
  double se_revenue = 0.0;
  double mean_rent_high = 0.0;
  double mean_rent_low = 0.0;
  double min_payoff_high = 0.0;
  double max_payoff_high = 0.0;
  double min_payoff_low = 0.0;
  double max_payoff_low = 0.0;
  std::size_t n_high = 0;
  std::size_t n_low = 0;
  std::size_t n_never_traded = 0;
  std::map<std::size_t, std::size_t> trade_time_histogram;
  std::uint64_t seed = 0;
  std::string rng = SplitMix64::kAlgorithm;
  double truncation_bound = 0.0;  ///< delta^horizon * v_high

  friend bool operator==(const MonteCarloSummary&, const MonteCarloSummary&) = default;
};

/// Called with (path index, record) for every simulated path.
using PathObserver = std::function<void(std::size_t, const PathRecord&)>;

/// Independent paths with the buyer type drawn per `draw` (one uniform per
/// path, high when it falls below mu0, for TypeDraw::Prior).
MonteCarloSummary monte_carlo(const ValueSurface& s, Belief mu0, TypeDraw draw, std::size_t n_paths,
                              std::uint64_t seed, SimOptions opts = {}, const PathObserver& observer = {});

const char* to_string(BuyerType t) noexcept;
const char* to_string(Action a) noexcept;
const char* to_string(TypeDraw d) noexcept;

/// Parses "low", "high" or "prior". Throws std::invalid_argument otherwise.
TypeDraw parse_type_draw(const std::string& text);

}  // namespace coase
