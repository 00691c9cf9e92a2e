#pragma once

#include <iosfwd>
#include <vector>

#include "coase/cli/config.hpp"

namespace coase::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;

/// Writes cutoffs.csv, cutoffs.json, mechanism.json and value_table.csv to
/// the output directory and prints a summary for the configured prior.
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Deviation scan over n_priors priors in [0.01, 0.99] plus the structure
/// checks; prints a JSON report and returns 1 on any failure.
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Monte Carlo at the configured prior; prints the summary JSON (also
/// written to mc_summary.json) and returns 1 if the rent or revenue checks fail.
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Writes sweep.csv over priors i / n_priors, i < n_priors.
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Priors used by cmd_verify.
std::vector<double> verify_priors(std::size_t n);

}  // namespace coase::cli
