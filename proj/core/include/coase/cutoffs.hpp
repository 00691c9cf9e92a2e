#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "coase/market.hpp"

namespace coase {

/// Why `compute_cutoffs` stopped.
enum class Termination {
  ReachedOne,     ///< last cutoff within the proximity tolerance of 1, or no further root
  MaxIterations,  ///< cutoff budget exhausted; beliefs above the last cutoff are unclassified
};

/// Thrown when a belief lies beyond what a truncated table can classify.
class TableExhausted : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct StoppingRule {
  std::size_t max_cutoffs = 200;    ///< largest cutoff index computed
  double proximity_to_one = 1e-10;  ///< stop once 1 - mu_bar_n <= this
};

/// Bisection settings for one cutoff.
inline constexpr double kCutoffTolerance = 1e-13;
inline constexpr int kMaxBisectionSteps = 60;

/// The increasing sequence 0 = mu_bar_0 < mu_bar_1 < mu_bar_2 < ... that
/// partitions beliefs into delay classes D_n = [mu_bar_n, mu_bar_n+1).
///
/// When v_low = 0 the table is the two-entry [0, 0]: every belief sits in
/// class 1 and delays at belief 0, where the low type never trades.
class CutoffTable {
 public:
  /// Builds a table from explicit cutoffs after checking the invariants
  /// (first entry 0, second v_low / v_high, strictly increasing after that).
  /// Throws std::invalid_argument on violation.
  static CutoffTable from_cutoffs(const MarketParams& params, std::vector<Belief> cutoffs,
                                  Termination reason);

  [[nodiscard]] const MarketParams& params() const noexcept { return params_; }
  [[nodiscard]] std::span<const Belief> cutoffs() const noexcept { return cutoffs_; }
  [[nodiscard]] Belief cutoff(std::size_t n) const { return cutoffs_.at(n); }
  [[nodiscard]] std::size_t size() const noexcept { return cutoffs_.size(); }
  [[nodiscard]] std::size_t last_index() const noexcept { return cutoffs_.size() - 1; }
  [[nodiscard]] Termination termination() const noexcept { return reason_; }
  [[nodiscard]] bool degenerate() const noexcept { return params_.v_low == 0.0; }

  friend bool operator==(const CutoffTable&, const CutoffTable&) = default;

 private:
  CutoffTable(MarketParams params, std::vector<Belief> cutoffs, Termination reason)
      : params_(params), cutoffs_(std::move(cutoffs)), reason_(reason) {}

  MarketParams params_;
  std::vector<Belief> cutoffs_;
  Termination reason_ = Termination::ReachedOne;
};

/// Difference between delaying at mu_bar_n and delaying at mu_bar_n-1 for
/// a seller with prior `mu` (the n+1 period versus n period indifference).
/// Negative below mu_bar_n+1, zero at it, positive above. `prefix` must
/// hold mu_bar_0 .. mu_bar_n. Throws std::domain_error at mu = 1.
double indifference_gap(const CutoffTable& prefix, std::size_t n, Belief mu);

/// Computes the cutoffs by bisecting the indifference gap on each
/// successive interval (mu_bar_n, 1).
CutoffTable compute_cutoffs(const MarketParams& params, StoppingRule stop = {});

/// Index n with mu in [mu_bar_n, mu_bar_n+1); ties at a cutoff belong to the
/// upper class. Throws TableExhausted past the last cutoff of a
/// MaxIterations table.
std::size_t delay_class(const CutoffTable& table, Belief mu);

}  // namespace coase
