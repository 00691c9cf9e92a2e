#include "coase/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coase {

std::vector<EnvelopePoint> concave_envelope(const std::vector<std::pair<Belief, double>>& points) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("concave envelope needs at least two points");
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && !(points[i - 1].first.value() < points[i].first.value())) {
      throw std::invalid_argument("envelope beliefs must be strictly increasing");
    }
    scale = std::max(scale, std::abs(points[i].second));
  }
  const double slack = 1e-13 * std::max(scale, 1.0);

  auto x = [&](std::size_t i) { return points[i].first.value(); };
  auto y = [&](std::size_t i) { return points[i].second; };

  // Upper hull; a middle point on or below the chord (up to rounding) is dropped.
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < n; ++i) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      const double cross = (x(b) - x(a)) * (y(i) - y(a)) - (y(b) - y(a)) * (x(i) - x(a));
      if (cross < -slack * (x(i) - x(a))) break;
      hull.pop_back();
    }
    hull.push_back(i);
  }

  std::vector<EnvelopePoint> out(n);
  std::size_t seg = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (seg + 1 < hull.size() && hull[seg + 1] < i) ++seg;
    double env = y(i);
    if (seg + 1 < hull.size() && hull[seg] != i && hull[seg + 1] != i) {
      const std::size_t a = hull[seg];
      const std::size_t b = hull[seg + 1];
      env = y(a) + (y(b) - y(a)) * ((x(i) - x(a)) / (x(b) - x(a)));
    }
    out[i] = {points[i].first, y(i), std::max(env, y(i))};
  }
  return out;
}

std::vector<Belief> scan_grid(const CutoffTable& table, Belief mu0, std::size_t grid_n) {
  if (grid_n < 2) throw std::invalid_argument("scan grid needs at least two points");
  std::vector<Belief> grid(table.cutoffs().begin(), table.cutoffs().end());
  grid.push_back(mu0);
  for (std::size_t i = 0; i < grid_n; ++i) {
    grid.push_back(Belief(static_cast<double>(i) / static_cast<double>(grid_n - 1)));
  }
  std::stable_sort(grid.begin(), grid.end(),
                   [](Belief a, Belief b) { return a.value() < b.value(); });
  grid.erase(std::unique(grid.begin(), grid.end(),
                         [](Belief a, Belief b) { return a.value() == b.value(); }),
             grid.end());
  return grid;
}

double stage_payoff(const ValueSurface& s, Belief mu_prime, Belief mu0) {
  const double sale = sale_value(s.params(), mu_prime, mu0);
  const double delay = s.params().delta * eval_R(s, mu_prime, mu0);
  return std::max(sale, delay);
}

namespace {

double trade_at(const ValueSurface& s, Belief mu_prime, Belief mu0) {
  const double sale = sale_value(s.params(), mu_prime, mu0);
  return sale > s.params().delta * eval_R(s, mu_prime, mu0) ? 1.0 : 0.0;
}

}  // namespace

DeviationReport deviation_scan(const ValueSurface& s, Belief mu0, ScanOptions opts) {
  if (mu0.certain_high()) throw std::domain_error("deviation scan needs a prior below 1");
  const auto& p = s.params();
  const auto grid = scan_grid(s.table(), mu0, opts.grid_n);
  const std::size_t n = grid.size();

  std::vector<double> w(n);
  std::size_t k = n;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = stage_payoff(s, grid[i], mu0);
    if (grid[i].value() == mu0.value()) k = i;
  }

  DeviationReport r;
  r.prior = mu0;
  r.grid_size = n;
  r.equilibrium_value = eval_R(s, mu0, mu0);

  double best = w[k];
  std::size_t best_a = k;
  std::size_t best_b = k;
  const double improve = 1e-12 * p.v_high;
  const bool use_low = mu0.value() > 0.5;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = k + 1; b < n; ++b) {
      double wa = 0.0;
      double wb = 0.0;
      if (use_low) {
        const double span = grid[a].complement() - grid[b].complement();
        wb = (grid[a].complement() - mu0.complement()) / span;
        wa = (mu0.complement() - grid[b].complement()) / span;
      } else {
        const double span = grid[b].value() - grid[a].value();
        wb = (mu0.value() - grid[a].value()) / span;
        wa = (grid[b].value() - mu0.value()) / span;
      }
      const double v = wa * w[a] + wb * w[b];
      if (v > best + improve) {
        best = v;
        best_a = a;
        best_b = b;
      }
    }
  }
  r.best_deviation_value = best;
  r.worst_gap = best - r.equilibrium_value;
  r.passed = r.worst_gap <= opts.tolerance * p.v_high;

  Split split;
  split.prior = mu0;
  split.delay_class = delay_class(s.table(), mu0);
  split.posterior_delay = grid[best_a];
  split.posterior_sale = grid[best_b];
  if (best_a == best_b) {
    split.weight_delay = 0.0;
    split.weight_sale = 1.0;
  } else {
    const double span = grid[best_a].complement() - grid[best_b].complement();
    split.weight_sale = (grid[best_a].complement() - mu0.complement()) / span;
    split.weight_delay = (mu0.complement() - grid[best_b].complement()) / span;
  }
  split.q_delay = trade_at(s, split.posterior_delay, mu0);
  split.q_sale = trade_at(s, split.posterior_sale, mu0);
  r.witness = split;

  std::vector<std::pair<Belief, double>> raw(n);
  for (std::size_t i = 0; i < n; ++i) raw[i] = {grid[i], eval_R(s, grid[i], mu0)};
  const auto cav_r = concave_envelope(raw);
  for (std::size_t i = 0; i < n; ++i) {
    raw[i].second = std::max(sale_value(p, grid[i], mu0), p.delta * cav_r[i].envelope);
  }
  r.envelope_value = concave_envelope(raw)[k].envelope;
  return r;
}

StructureReport structure_checks(const ValueSurface& s, std::size_t grid_n, double residual_tolerance) {
  if (grid_n < 1) throw std::invalid_argument("structure checks need at least one prior");
  const auto& table = s.table();
  const auto& p = s.params();
  const Belief first_cut = table.cutoff(1);
  StructureReport r;

  std::optional<Belief> last_delay;
  for (std::size_t i = 0; i < grid_n; ++i) {
    const Belief mu0(static_cast<double>(i) / static_cast<double>(grid_n));
    Split split;
    try {
      split = equilibrium_split(table, mu0);
    } catch (const TableExhausted&) {
      r.finite_delay = false;
      continue;
    }
    const bool delays = split.delay_class >= 1;
    if (delays) {
      const auto cuts = table.cutoffs();
      const bool on_cut = split.posterior_delay == table.cutoff(split.delay_class - 1) &&
                          std::find(cuts.begin(), cuts.end(), split.posterior_delay) != cuts.end();
      r.delay_posteriors_are_cutoffs = r.delay_posteriors_are_cutoffs && on_cut;
      if (last_delay && split.posterior_delay < *last_delay) r.delay_posterior_monotone = false;
      last_delay = split.posterior_delay;
      if (!(split.posterior_sale.certain_high() && split.q_sale == 1.0)) r.split_shape = false;
    }
    const bool no_trade_at_delay = split.q_delay == 0.0;
    if (no_trade_at_delay != (mu0.value() >= first_cut.value())) r.split_shape = false;
  }

  if (!table.degenerate()) {
    for (std::size_t n = 1; n + 1 < table.size(); ++n) {
      const double gap = std::abs(indifference_gap(table, n, table.cutoff(n + 1)));
      r.max_residual = std::max(r.max_residual, gap);
    }
    r.indifference_residuals = r.max_residual <= residual_tolerance * p.v_high;
  }
  return r;
}

}  // namespace coase
