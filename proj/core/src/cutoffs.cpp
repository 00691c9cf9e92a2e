#include "coase/cutoffs.hpp"

#include <algorithm>
#include <string>

#include "coase/value.hpp"

namespace coase {

CutoffTable CutoffTable::from_cutoffs(const MarketParams& params, std::vector<Belief> cutoffs,
                                      Termination reason) {
  params.validate();
  if (cutoffs.size() < 2) throw std::invalid_argument("cutoff table needs at least mu_bar_0 and mu_bar_1");
  if (cutoffs[0].value() != 0.0) throw std::invalid_argument("mu_bar_0 must be 0");
  if (cutoffs[1] != mu_bar_1(params)) throw std::invalid_argument("mu_bar_1 must equal v_low / v_high");
  if (params.v_low == 0.0) {
    if (cutoffs.size() != 2) throw std::invalid_argument("v_low = 0 admits only the table [0, 0]");
    return CutoffTable(params, std::move(cutoffs), Termination::ReachedOne);
  }
  for (std::size_t i = 1; i + 1 < cutoffs.size(); ++i) {
    if (!(cutoffs[i].value() < cutoffs[i + 1].value())) {
      throw std::invalid_argument("cutoffs must be strictly increasing (index " + std::to_string(i + 1) + ")");
    }
  }
  return CutoffTable(params, std::move(cutoffs), reason);
}

namespace {

// Delaying at mu_bar_n is the class n+1 branch of R, delaying at
// mu_bar_n-1 the class n branch, both evaluated at posterior = prior = mu.
double gap_on(const ValueSurface& prefix, std::size_t n, Belief mu) {
  return eval_R_branch(prefix, n + 1, mu, mu) - eval_R_branch(prefix, n, mu, mu);
}

void check_gap_args(const CutoffTable& prefix, std::size_t n, Belief mu) {
  if (prefix.degenerate()) throw std::invalid_argument("no indifference cutoffs when v_low = 0");
  if (n == 0 || n > prefix.last_index()) {
    throw std::invalid_argument("indifference gap index " + std::to_string(n) + " outside the table prefix");
  }
  if (mu.certain_high()) throw std::domain_error("indifference gap undefined at belief 1");
}

}  // namespace

double indifference_gap(const CutoffTable& prefix, std::size_t n, Belief mu) {
  check_gap_args(prefix, n, mu);
  return gap_on(ValueSurface(prefix), n, mu);
}

CutoffTable compute_cutoffs(const MarketParams& params, StoppingRule stop) {
  params.validate();
  std::vector<Belief> cutoffs{Belief(0.0), mu_bar_1(params)};
  if (params.v_low == 0.0) {
    cutoffs[1] = Belief(0.0);
    return CutoffTable::from_cutoffs(params, std::move(cutoffs), Termination::ReachedOne);
  }
  if (cutoffs[1].complement() <= stop.proximity_to_one) {
    return CutoffTable::from_cutoffs(params, std::move(cutoffs), Termination::ReachedOne);
  }

  for (std::size_t n = 1;; ++n) {
    if (n + 1 > stop.max_cutoffs) {
      return CutoffTable::from_cutoffs(params, std::move(cutoffs), Termination::MaxIterations);
    }
    const ValueSurface prefix(
        CutoffTable::from_cutoffs(params, cutoffs, Termination::MaxIterations));

    // Bisect on the low-type weight c = 1 - mu over (1e-13, c_n - 1e-13).
    // The gap increases in mu, so it decreases in c.
    const double c_n = cutoffs[n].complement();
    double near_one = kCutoffTolerance;          // gap > 0 side
    double near_cut = c_n - kCutoffTolerance;    // gap < 0 side
    if (!(near_one < near_cut) ||
        gap_on(prefix, n, Belief::from_complement(near_cut)) >= 0.0 ||
        gap_on(prefix, n, Belief::from_complement(near_one)) <= 0.0) {
      return CutoffTable::from_cutoffs(params, std::move(cutoffs), Termination::ReachedOne);
    }
    const double width = kCutoffTolerance * c_n;
    for (int step = 0; step < kMaxBisectionSteps && near_cut - near_one > width; ++step) {
      const double mid = 0.5 * (near_one + near_cut);
      const double g = gap_on(prefix, n, Belief::from_complement(mid));
      if (g > 0.0) {
        near_one = mid;
      } else if (g < 0.0) {
        near_cut = mid;
      } else {
        near_one = near_cut = mid;
      }
    }
    const Belief next = Belief::from_complement(0.5 * (near_one + near_cut));
    if (!(next.value() > cutoffs[n].value())) {
      // Below double resolution of the belief; nothing further to separate.
      return CutoffTable::from_cutoffs(params, std::move(cutoffs), Termination::ReachedOne);
    }
    cutoffs.push_back(next);
    if (next.complement() <= stop.proximity_to_one) {
      return CutoffTable::from_cutoffs(params, std::move(cutoffs), Termination::ReachedOne);
    }
  }
}

std::size_t delay_class(const CutoffTable& table, Belief mu) {
  if (table.degenerate()) return 1;
  const auto cuts = table.cutoffs();
  const auto it = std::upper_bound(cuts.begin(), cuts.end(), mu.value(),
                                   [](double v, Belief c) { return v < c.value(); });
  const auto n = static_cast<std::size_t>(it - cuts.begin()) - 1;
  if (n == table.last_index() && table.termination() == Termination::MaxIterations &&
      mu.value() > cuts.back().value()) {
    throw TableExhausted("belief " + to_string(mu) + " lies beyond the last computed cutoff " +
                         to_string(cuts.back()));
  }
  return n;
}

}  // namespace coase
