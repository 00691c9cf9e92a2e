#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coase/cutoffs.hpp"
#include "coase/market.hpp"
#include "coase/mechanism.hpp"
#include "coase/value.hpp"

namespace coase {

struct EnvelopePoint {
  Belief mu;
  double raw = 0.0;
  double envelope = 0.0;
};

/// Least concave majorant of the points, evaluated on their own beliefs
/// (upper hull by monotone chain, then linear interpolation between hull
/// vertices). Throws std::invalid_argument for fewer than two points or
/// beliefs that are not strictly increasing.
std::vector<EnvelopePoint> concave_envelope(const std::vector<std::pair<Belief, double>>& points);

struct ScanOptions {
  std::size_t grid_n = 1001;
  double tolerance = 1e-8;  ///< relative to v_high
};

struct DeviationReport {
  Belief prior;
  double best_deviation_value = 0.0;
  double equilibrium_value = 0.0;
  double worst_gap = 0.0;
  std::optional<Split> witness;
  /// cav of max{sale, delta * cav R} at the prior; a diagnostic, not a check.
  double envelope_value = 0.0;
  std::size_t grid_size = 0;
  bool passed = false;
};

/// Grid used by deviation_scan: a uniform grid, every cutoff and the prior,
/// sorted by belief. Cutoff labels win over uniform points with equal value.
std::vector<Belief> scan_grid(const CutoffTable& table, Belief mu0, std::size_t grid_n);

/// Stage payoff max{sale value, delta * R(mu', mu0)} of inducing mu'.
double stage_payoff(const ValueSurface& s, Belief mu_prime, Belief mu0);

/// Best one-shot deviation over two-point Bayes-plausible splits of the
/// prior against the equilibrium continuation values.
/// Throws std::domain_error at mu0 = 1.
DeviationReport deviation_scan(const ValueSurface& s, Belief mu0, ScanOptions opts = {});

struct StructureReport {
  bool delay_posteriors_are_cutoffs = true;
  bool delay_posterior_monotone = true;
  bool finite_delay = true;
  bool split_shape = true;
  bool indifference_residuals = true;
  double max_residual = 0.0;  ///< largest |gap| at a computed cutoff

  [[nodiscard]] bool passed() const noexcept {
    return delay_posteriors_are_cutoffs && delay_posterior_monotone && finite_delay && split_shape &&
           indifference_residuals;
  }
};

/// Checks the shape of the equilibrium split over `grid_n` priors in [0, 1)
/// and the indifference residual at every computed cutoff.
StructureReport structure_checks(const ValueSurface& s, std::size_t grid_n = 1001,
                                 double residual_tolerance = 1e-10);

}  // namespace coase
