#include "coase/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "coase/cutoffs.hpp"
#include "coase/io.hpp"
#include "coase/mechanism.hpp"
#include "coase/sim.hpp"
#include "coase/value.hpp"
#include "coase/verify.hpp"

namespace coase::cli {

using nlohmann::json;

namespace {

std::string short_num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::ofstream open_output(const RunConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.output_dir);
  const auto path = cfg.output_dir / name;
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path.string());
  return f;
}

json params_json(const MarketParams& p) {
  return {{"v_low", p.v_low}, {"v_high", p.v_high}, {"delta", p.delta}, {"mu0", p.mu0.value()}};
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace

std::vector<double> verify_priors(std::size_t n) {
  if (n == 1) return {0.5};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = 0.01 + 0.98 * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    const auto& p = cfg.params;
    const ValueSurface s(compute_cutoffs(p));
    const auto& table = s.table();
    const Mechanism m = build_mechanism(table, p.mu0);
    const PostedPrice offer = posted_price_view(m, table);

    {
      auto f = open_output(cfg, "cutoffs.csv");
      write_cutoffs_csv(f, table);
    }
    open_output(cfg, "cutoffs.json") << cutoffs_to_json(table) << '\n';
    open_output(cfg, "mechanism.json") << mechanism_to_json(m) << '\n';
    {
      auto f = open_output(cfg, "value_table.csv");
      write_value_table_csv(f, s, cfg.value_grid);
    }

    out << "params       v_low=" << short_num(p.v_low) << " v_high=" << short_num(p.v_high)
        << " delta=" << short_num(p.delta) << " mu0=" << short_num(p.mu0.value()) << '\n';
    out << "cutoffs      " << table.size() << " (" << to_string(table.termination()) << ")";
    for (std::size_t i = 1; i < table.size() && i <= 4; ++i) out << " " << short_num(table.cutoff(i).value());
    out << (table.size() > 5 ? " ..." : "") << '\n';
    out << "class        n=" << m.delay_class << '\n';
    out << "price        " << short_num(offer.price) << '\n';
    out << "accept_high  " << short_num(offer.accept_prob_high) << '\n';
    out << "revenue      " << short_num(seller_revenue(s, p.mu0)) << '\n';
    out << "rent         " << short_num(buyer_rent(s, p.mu0)) << '\n';
    if (table.degenerate()) out << "note         low type never trades\n";
    out << "wrote        " << (cfg.output_dir / "cutoffs.csv").string() << ", mechanism.json, value_table.csv\n";
    return kExitOk;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    const ValueSurface s(compute_cutoffs(cfg.params));
    const double vh = cfg.params.v_high;

    json failures = json::array();
    double max_gap = -INFINITY;
    double max_envelope_diff = 0.0;
    for (double mu : verify_priors(cfg.n_priors)) {
      const DeviationReport r = deviation_scan(s, Belief(mu), {cfg.grid_n, cfg.tolerances.scan});
      max_gap = std::max(max_gap, r.worst_gap);
      max_envelope_diff = std::max(max_envelope_diff, std::abs(r.envelope_value - r.equilibrium_value));
      if (!r.passed) {
        failures.push_back({{"check", "deviation_scan"},
                            {"prior", mu},
                            {"gap", r.worst_gap},
                            {"best_deviation_value", r.best_deviation_value},
                            {"equilibrium_value", r.equilibrium_value}});
      }
    }

    const StructureReport st = structure_checks(s, cfg.grid_n, cfg.tolerances.residual);
    const std::pair<const char*, bool> checks[] = {
        {"delay_posteriors_are_cutoffs", st.delay_posteriors_are_cutoffs},
        {"delay_posterior_monotone", st.delay_posterior_monotone},
        {"finite_delay", st.finite_delay},
        {"split_shape", st.split_shape},
        {"indifference_residuals", st.indifference_residuals},
    };
    json structure = json::object();
    for (const auto& [name, ok] : checks) {
      structure[name] = ok;
      if (!ok) failures.push_back({{"check", name}});
    }
    structure["max_residual"] = st.max_residual;

    const json report{{"params", params_json(cfg.params)},
                      {"n_priors", cfg.n_priors},
                      {"grid_n", cfg.grid_n},
                      {"max_gap", max_gap},
                      {"tolerance", cfg.tolerances.scan * vh},
                      {"max_envelope_minus_equilibrium", max_envelope_diff},
                      {"structure", structure},
                      {"failures", failures},
                      {"passed", failures.empty()}};
    out << report.dump(2) << '\n';
    return failures.empty() ? kExitOk : kExitCheckFailed;
  });
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    const auto& p = cfg.params;
    const ValueSurface s(compute_cutoffs(p));

    std::ofstream paths;
    PathObserver observer;
    if (cfg.paths_csv) {
      if (cfg.paths_csv->has_parent_path()) std::filesystem::create_directories(cfg.paths_csv->parent_path());
      paths.open(*cfg.paths_csv);
      if (!paths) throw ConfigError("cannot write " + cfg.paths_csv->string());
      paths << "path,buyer,period,belief,price,action\n";
      observer = [&paths](std::size_t i, const PathRecord& rec) {
        for (const auto& step : rec.steps) {
          paths << i << ',' << to_string(step.buyer) << ',' << step.period << ','
                << format_double(step.belief.value()) << ',' << format_double(step.price) << ','
                << to_string(step.action) << '\n';
        }
      };
    }
    const MonteCarloSummary mc =
        monte_carlo(s, p.mu0, cfg.type_draw, cfg.mc_paths, cfg.seed, {cfg.horizon}, observer);

    const double tol = 1e-12 * p.v_high;
    const double rent = buyer_rent(s, p.mu0);
    json checks = json::object();
    bool ok = true;
    if (mc.n_high > 0) {
      const bool flat = mc.max_payoff_high - mc.min_payoff_high <= tol &&
                        std::abs(mc.min_payoff_high - rent) <= tol && std::abs(mc.max_payoff_high - rent) <= tol;
      checks["high_rent_path_invariant"] = flat;
      ok = ok && flat;
    }
    if (mc.n_low > 0) {
      const bool zero = mc.min_payoff_low == 0.0 && mc.max_payoff_low == 0.0;
      checks["low_payoff_zero"] = zero;
      ok = ok && zero;
    }
    if (cfg.type_draw == TypeDraw::Prior) {
      const double analytic = seller_revenue(s, p.mu0);
      const double band = mc.se_revenue > 0.0 ? 3.0 * mc.se_revenue : tol;
      const bool within = std::abs(mc.mean_revenue - analytic) <= band;
      checks["analytic_revenue"] = analytic;
      checks["revenue_within_3se"] = within;
      ok = ok && within;
    }
    checks["expected_rent_high"] = rent;

    json report = json::parse(summary_to_json(mc));
    report["params"] = params_json(p);
    report["type_draw"] = to_string(cfg.type_draw);
    report["checks"] = checks;
    report["passed"] = ok;
    open_output(cfg, "mc_summary.json") << report.dump(2) << '\n';
    out << report.dump(2) << '\n';
    return ok ? kExitOk : kExitCheckFailed;
  });
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    cfg.validate();
    const ValueSurface s(compute_cutoffs(cfg.params));
    auto f = open_output(cfg, "sweep.csv");
    f << "mu0,analytic_revenue,mc_revenue,rent,price,delay_class\n";
    const std::size_t k = cfg.n_priors;
    for (std::size_t i = 0; i < k; ++i) {
      const Belief mu0(static_cast<double>(i) / static_cast<double>(k));
      const std::size_t n = delay_class(s.table(), mu0);
      const MonteCarloSummary mc = monte_carlo(s, mu0, TypeDraw::Prior, cfg.mc_paths, cfg.seed, {cfg.horizon});
      f << format_double(mu0.value()) << ',' << format_double(seller_revenue(s, mu0)) << ','
        << format_double(mc.mean_revenue) << ',' << format_double(buyer_rent(s, mu0)) << ','
        << format_double(posted_price_for_class(s.table(), n)) << ',' << n << '\n';
    }
    out << "wrote " << (cfg.output_dir / "sweep.csv").string() << " (" << k << " priors)\n";
    return kExitOk;
  });
}

}  // namespace coase::cli
