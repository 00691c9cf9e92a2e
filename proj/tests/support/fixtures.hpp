#pragma once

#include <vector>

#include "coase/cutoffs.hpp"
#include "coase/market.hpp"
#include "coase/value.hpp"

namespace fixtures {

inline coase::MarketParams params(double vl, double vh, double d, double mu0 = 0.5) {
  return coase::make_params(vl, vh, d, mu0);
}

inline coase::ValueSurface surface(double vl, double vh, double d) {
  return coase::ValueSurface(coase::compute_cutoffs(params(vl, vh, d)));
}

/// (1, 2, 0.8) table with mu_bar_2 moved up by 0.01; everything else as solved.
inline coase::CutoffTable perturbed_table() {
  const auto solved = coase::compute_cutoffs(params(1, 2, 0.8));
  std::vector<coase::Belief> cuts(solved.cutoffs().begin(), solved.cutoffs().end());
  cuts[2] = coase::Belief(cuts[2].value() + 0.01);
  return coase::CutoffTable::from_cutoffs(solved.params(), cuts, solved.termination());
}

/// The three instances the equilibrium checks sweep over.
struct Instance {
  double v_low, v_high, delta;
};
inline const std::vector<Instance>& verify_instances() {
  static const std::vector<Instance> all{{1, 2, 0.8}, {1, 2, 0.95}, {0, 1, 0.9}};
  return all;
}

}  // namespace fixtures
