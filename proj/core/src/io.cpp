#include "coase/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

namespace coase {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Belief belief_from_columns(double value, double complement) {
  if (const Belief b(value); b.complement() == complement) return b;
  if (const Belief b = Belief::from_complement(complement); b.value() == value) return b;
  throw ParseError("belief columns " + format_double(value) + " and " + format_double(complement) +
                   " do not describe one belief");
}

const char* to_string(Termination t) noexcept {
  return t == Termination::ReachedOne ? "reached_one" : "max_iterations";
}

Termination parse_termination(const std::string& text) {
  if (text == "reached_one") return Termination::ReachedOne;
  if (text == "max_iterations") return Termination::MaxIterations;
  throw ParseError("unknown termination '" + text + "'");
}

namespace {

double parse_number(const std::string& field) {
  double x = 0.0;
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, x);
  if (ec != std::errc() || ptr != end) throw ParseError("not a number: '" + field + "'");
  return x;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

json belief_json(Belief b) { return {{"posterior", b.value()}, {"posterior_complement", b.complement()}}; }

Belief belief_of(const json& j) {
  return belief_from_columns(j.at("posterior").get<double>(), j.at("posterior_complement").get<double>());
}

json params_json(const MarketParams& p) {
  return {{"v_low", p.v_low}, {"v_high", p.v_high}, {"delta", p.delta}, {"mu0", p.mu0.value()}};
}

MarketParams params_of(const json& j) {
  return make_params(j.at("v_low").get<double>(), j.at("v_high").get<double>(), j.at("delta").get<double>(),
                     j.at("mu0").get<double>());
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

void write_cutoffs_csv(std::ostream& os, const CutoffTable& table) {
  os << "n,mu_bar,one_minus_mu_bar\n";
  for (std::size_t n = 0; n < table.size(); ++n) {
    const Belief b = table.cutoff(n);
    os << n << ',' << format_double(b.value()) << ',' << format_double(b.complement()) << '\n';
  }
}

CutoffTable read_cutoffs_csv(std::istream& is, const MarketParams& params, Termination reason) {
  std::string line;
  if (!std::getline(is, line) || line != "n,mu_bar,one_minus_mu_bar") {
    throw ParseError("cutoff CSV must start with the header n,mu_bar,one_minus_mu_bar");
  }
  std::vector<Belief> cutoffs;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 3) throw ParseError("cutoff CSV row needs 3 fields: '" + line + "'");
    if (parse_number(fields[0]) != static_cast<double>(cutoffs.size())) {
      throw ParseError("cutoff CSV rows out of order at '" + line + "'");
    }
    cutoffs.push_back(belief_from_columns(parse_number(fields[1]), parse_number(fields[2])));
  }
  return CutoffTable::from_cutoffs(params, std::move(cutoffs), reason);
}

std::string params_to_json(const MarketParams& p) { return params_json(p).dump(2); }

MarketParams params_from_json(const std::string& text) {
  return guarded([&] { return params_of(json::parse(text)); });
}

std::string cutoffs_to_json(const CutoffTable& table) {
  json rows = json::array();
  for (std::size_t n = 0; n < table.size(); ++n) {
    const Belief b = table.cutoff(n);
    rows.push_back({{"n", n}, {"mu_bar", b.value()}, {"one_minus_mu_bar", b.complement()}});
  }
  json j{{"params", params_json(table.params())},
         {"termination", to_string(table.termination())},
         {"cutoffs", rows}};
  return j.dump(2);
}

CutoffTable cutoffs_from_json(const std::string& text) {
  return guarded([&] {
    const json j = json::parse(text);
    std::vector<Belief> cutoffs;
    for (const auto& row : j.at("cutoffs")) {
      cutoffs.push_back(
          belief_from_columns(row.at("mu_bar").get<double>(), row.at("one_minus_mu_bar").get<double>()));
    }
    return CutoffTable::from_cutoffs(params_of(j.at("params")), std::move(cutoffs),
                                     parse_termination(j.at("termination").get<std::string>()));
  });
}

std::string mechanism_to_json(const Mechanism& m) {
  json low = json::array();
  json high = json::array();
  json trade = json::array();
  json transfer = json::array();
  for (const auto& o : m.outcomes) {
    auto entry = [&](const char* key, double x) {
      json at = belief_json(o.posterior);
      at[key] = x;
      return at;
    };
    low.push_back(entry("prob", o.prob_low));
    high.push_back(entry("prob", o.prob_high));
    trade.push_back(entry("value", o.trade_prob));
    transfer.push_back(entry("value", o.transfer));
  }
  json j{{"prior", m.prior.value()},
         {"prior_complement", m.prior.complement()},
         {"n", m.delay_class},
         {"device", {{"low", low}, {"high", high}}},
         {"trade_prob", trade},
         {"transfer", transfer},
         {"posted_price", m.posted_price}};
  return j.dump(2);
}

Mechanism mechanism_from_json(const std::string& text) {
  return guarded([&] {
    const json j = json::parse(text);
    Mechanism m;
    m.prior = belief_from_columns(j.at("prior").get<double>(), j.at("prior_complement").get<double>());
    m.delay_class = j.at("n").get<std::size_t>();
    m.posted_price = j.at("posted_price").get<double>();
    const auto& low = j.at("device").at("low");
    const auto& high = j.at("device").at("high");
    const auto& trade = j.at("trade_prob");
    const auto& transfer = j.at("transfer");
    if (high.size() != low.size() || trade.size() != low.size() || transfer.size() != low.size()) {
      throw ParseError("mechanism lists must have one entry per posterior");
    }
    for (std::size_t i = 0; i < low.size(); ++i) {
      const Belief at = belief_of(low[i]);
      if (belief_of(high[i]) != at || belief_of(trade[i]) != at || belief_of(transfer[i]) != at) {
        throw ParseError("mechanism lists disagree on posterior " + std::to_string(i));
      }
      m.outcomes.push_back({at, low[i].at("prob").get<double>(), high[i].at("prob").get<double>(),
                            trade[i].at("value").get<double>(), transfer[i].at("value").get<double>()});
    }
    return m;
  });
}

std::string summary_to_json(const MonteCarloSummary& s) {
  json hist = json::object();
  for (const auto& [period, count] : s.trade_time_histogram) hist[std::to_string(period)] = count;
  json j{{"n_paths", s.n_paths},
         {"mean_revenue", s.mean_revenue},
         {"se_revenue", s.se_revenue},
         {"mean_rent_high", s.mean_rent_high},
         {"mean_rent_low", s.mean_rent_low},
         {"min_payoff_high", s.min_payoff_high},
         {"max_payoff_high", s.max_payoff_high},
         {"min_payoff_low", s.min_payoff_low},
         {"max_payoff_low", s.max_payoff_low},
         {"n_high", s.n_high},
         {"n_low", s.n_low},
         {"n_never_traded", s.n_never_traded},
         {"trade_time_histogram", hist},
         {"seed", s.seed},
         {"rng", s.rng},
         {"truncation_bound", s.truncation_bound}};
  return j.dump(2);
}

void write_value_table_csv(std::ostream& os, const ValueSurface& s, std::size_t grid_n) {
  if (grid_n == 0) throw std::invalid_argument("value table needs at least one prior");
  os << "mu0,delay_class,revenue,rent,price,alpha,gamma\n";
  for (std::size_t i = 0; i < grid_n; ++i) {
    const Belief mu0(static_cast<double>(i) / static_cast<double>(grid_n));
    const std::size_t n = delay_class(s.table(), mu0);
    const RDecomposition d = decompose_R(s, mu0);
    os << format_double(mu0.value()) << ',' << n << ',' << format_double(seller_revenue(s, mu0)) << ','
       << format_double(rent_for_class(s.table(), n)) << ','
       << format_double(posted_price_for_class(s.table(), n)) << ',' << format_double(d.alpha) << ','
       << format_double(d.gamma) << '\n';
  }
}

}  // namespace coase
