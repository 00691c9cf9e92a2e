#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "coase/cutoffs.hpp"
#include "coase/market.hpp"
#include "coase/mechanism.hpp"
#include "coase/sim.hpp"
#include "coase/value.hpp"

namespace coase {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double x);

/// Belief from its two written columns, preferring whichever construction
/// reproduces both. Throws ParseError if neither does.
Belief belief_from_columns(double value, double complement);

const char* to_string(Termination t) noexcept;
Termination parse_termination(const std::string& text);

/// CSV with header n,mu_bar,one_minus_mu_bar.
void write_cutoffs_csv(std::ostream& os, const CutoffTable& table);
CutoffTable read_cutoffs_csv(std::istream& is, const MarketParams& params, Termination reason);

std::string params_to_json(const MarketParams& p);
MarketParams params_from_json(const std::string& text);

std::string cutoffs_to_json(const CutoffTable& table);
CutoffTable cutoffs_from_json(const std::string& text);

std::string mechanism_to_json(const Mechanism& m);
Mechanism mechanism_from_json(const std::string& text);

std::string summary_to_json(const MonteCarloSummary& summary);

/// CSV over priors i / grid_n, i < grid_n, with header
/// mu0,delay_class,revenue,rent,price,alpha,gamma.
void write_value_table_csv(std::ostream& os, const ValueSurface& s, std::size_t grid_n);

}  // namespace coase
