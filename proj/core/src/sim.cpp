#include "coase/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "coase/mechanism.hpp"

namespace coase {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

PathRecord run_path(const ValueSurface& s, Belief mu0, BuyerType buyer, SplitMix64& rng, SimOptions opts,
                    bool record) {
  if (mu0.certain_high()) throw std::domain_error("simulation needs a prior below 1");
  const auto& p = s.params();
  const auto& table = s.table();
  PathRecord rec;
  rec.buyer = buyer;
  // v_low = 0 and a low buyer: the price stays at v_high and is never taken.
  if (table.degenerate() && buyer == BuyerType::Low && !record) return rec;

  const double value = buyer == BuyerType::High ? p.v_high : p.v_low;
  Belief mu = mu0;
  double discount = 1.0;
  for (std::size_t t = 0; t < opts.horizon; ++t) {
    const PostedPrice offer = posted_price_view(build_mechanism(table, mu), table);
    bool accept = false;
    if (buyer == BuyerType::High) {
      const double a = offer.accept_prob_high;
      accept = a >= 1.0 || (a > 0.0 && rng.uniform() < a);
    } else {
      accept = offer.price <= p.v_low;
    }
    if (record) rec.steps.push_back({t, mu, offer.price, buyer, accept ? Action::Accept : Action::Reject});
    if (accept) {
      rec.trade_period = t;
      rec.discounted_revenue = discount * offer.price;
      rec.discounted_buyer_payoff = discount * (value - offer.price);
      return rec;
    }
    mu = offer.reject_posterior;
    discount *= p.delta;
  }
  return rec;
}

}  // namespace

SplitMix64 SplitMix64::for_path(std::uint64_t seed, std::uint64_t path_index) noexcept {
  return SplitMix64(mix64(seed + kGolden * (path_index + 1)));
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += kGolden;
  return mix64(state_);
}

PathRecord simulate_path(const ValueSurface& s, Belief mu0, BuyerType buyer, SplitMix64& rng, SimOptions opts) {
  return run_path(s, mu0, buyer, rng, opts, true);
}

MonteCarloSummary monte_carlo(const ValueSurface& s, Belief mu0, TypeDraw draw, std::size_t n_paths,
                              std::uint64_t seed, SimOptions opts, const PathObserver& observer) {
  if (n_paths == 0) throw std::invalid_argument("monte carlo needs at least one path");
  if (mu0.certain_high()) throw std::domain_error("simulation needs a prior below 1");
  const auto& p = s.params();

  MonteCarloSummary out;
  out.n_paths = n_paths;
  out.seed = seed;
  out.truncation_bound = std::pow(p.delta, static_cast<double>(opts.horizon)) * p.v_high;

  constexpr double inf = std::numeric_limits<double>::infinity();
  double mean = 0.0;
  double m2 = 0.0;
  double sum_high = 0.0;
  double sum_low = 0.0;
  double min_high = inf, max_high = -inf, min_low = inf, max_low = -inf;

  for (std::size_t i = 0; i < n_paths; ++i) {
    SplitMix64 rng = SplitMix64::for_path(seed, i);
    BuyerType buyer = draw == TypeDraw::FixedHigh ? BuyerType::High : BuyerType::Low;
    if (draw == TypeDraw::Prior) buyer = rng.uniform() < mu0.value() ? BuyerType::High : BuyerType::Low;

    const PathRecord rec = run_path(s, mu0, buyer, rng, opts, static_cast<bool>(observer));
    if (observer) observer(i, rec);

    const double delta = rec.discounted_revenue - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (rec.discounted_revenue - mean);

    const double u = rec.discounted_buyer_payoff;
    if (buyer == BuyerType::High) {
      ++out.n_high;
      sum_high += u;
      min_high = std::min(min_high, u);
      max_high = std::max(max_high, u);
    } else {
      ++out.n_low;
      sum_low += u;
      min_low = std::min(min_low, u);
      max_low = std::max(max_low, u);
    }
    if (rec.trade_period) {
      ++out.trade_time_histogram[*rec.trade_period];
    } else {
      ++out.n_never_traded;
    }
  }

  const auto n = static_cast<double>(n_paths);
  out.mean_revenue = mean;
  out.se_revenue = n_paths > 1 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0;
  if (out.n_high > 0) {
    out.mean_rent_high = sum_high / static_cast<double>(out.n_high);
    out.min_payoff_high = min_high;
    out.max_payoff_high = max_high;
  }
  if (out.n_low > 0) {
    out.mean_rent_low = sum_low / static_cast<double>(out.n_low);
    out.min_payoff_low = min_low;
    out.max_payoff_low = max_low;
  }
  return out;
}

const char* to_string(BuyerType t) noexcept { return t == BuyerType::High ? "high" : "low"; }

const char* to_string(Action a) noexcept { return a == Action::Accept ? "accept" : "reject"; }

const char* to_string(TypeDraw d) noexcept {
  switch (d) {
    case TypeDraw::FixedLow: return "low";
    case TypeDraw::FixedHigh: return "high";
    case TypeDraw::Prior: return "prior";
  }
  return "prior";
}

TypeDraw parse_type_draw(const std::string& text) {
  if (text == "low" || text == "fixed_low") return TypeDraw::FixedLow;
  if (text == "high" || text == "fixed_high") return TypeDraw::FixedHigh;
  if (text == "prior") return TypeDraw::Prior;
  throw std::invalid_argument("type draw must be low, high or prior (got '" + text + "')");
}

}  // namespace coase
