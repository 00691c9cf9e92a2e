#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace coase {

/// Distance from {0, 1} inside which a probability snaps to the endpoint.
inline constexpr double kBeliefSnap = 1e-12;

/// The seller's belief about the buyer: a distribution over {v_low, v_high}.
///
/// Both weights are stored. `value()` is the weight on v_high and
/// `complement()` the weight on v_low. Constructing from the high weight
/// sets the complement to 1 - value; constructing with `from_complement`
/// keeps the low weight exactly, which is how beliefs within 1e-10 of
/// certainty keep their relative precision (the cutoff sequence
/// accumulates there).
class Belief {
 public:
  constexpr Belief() = default;

  /// Throws std::invalid_argument outside [-1e-12, 1 + 1e-12]; snaps to 0
  /// or 1 within 1e-12 of an endpoint.
  explicit Belief(double high);

  /// Belief with low-type weight `low`, kept exactly for low in (0, 1].
  static Belief from_complement(double low);

  [[nodiscard]] constexpr double value() const noexcept { return high_; }
  [[nodiscard]] constexpr double complement() const noexcept { return low_; }
  [[nodiscard]] constexpr bool certain_high() const noexcept { return low_ == 0.0; }

  friend constexpr bool operator==(Belief a, Belief b) noexcept {
    return a.high_ == b.high_ && a.low_ == b.low_;
  }
  /// Orders by weight on v_high; equal rounded values fall back to the
  /// exact low weight (larger low weight = smaller belief).
  friend constexpr std::partial_ordering operator<=>(Belief a, Belief b) noexcept {
    if (auto c = a.high_ <=> b.high_; c != 0) return c;
    return b.low_ <=> a.low_;
  }

 private:
  constexpr Belief(double high, double low) : high_(high), low_(low) {}

  double high_ = 0.0;
  double low_ = 1.0;
};

/// One problem instance: buyer values, the common discount factor and the
/// seller's prior.
struct MarketParams {
  double v_low = 1.0;
  double v_high = 2.0;
  double delta = 0.8;
  Belief mu0 = Belief(0.5);

  /// Throws std::invalid_argument unless 0 <= v_low < v_high and 0 < delta < 1.
  void validate() const;

  [[nodiscard]] double delta_v() const noexcept { return v_high - v_low; }

  friend bool operator==(const MarketParams&, const MarketParams&) = default;
};

/// Validated constructor.
MarketParams make_params(double v_low, double v_high, double delta, double mu0);

/// The buyer's virtual value v_low - mu / (1 - mu) * (v_high - v_low).
/// Throws std::domain_error at mu = 1.
double virtual_value(const MarketParams& p, Belief mu);

/// The belief v_low / v_high at which the virtual value crosses zero.
Belief mu_bar_1(const MarketParams& p);

/// Seller's value of trading with both types at posterior `posterior`
/// when rents are priced at `prior`: mu' v_high + (1 - mu') vhat(prior).
double sale_value(const MarketParams& p, Belief posterior, Belief prior);

std::string to_string(Belief b);

}  // namespace coase
