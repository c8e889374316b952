// Command dispatch for the `qmg` tool.

#pragma once

#include <ostream>
#include <span>
#include <string>

#include "qmg/analysis.hpp"
#include "qmg/config.hpp"
#include "qmg/table.hpp"

namespace qmg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Fixed column layouts for emitted tables.
Table sweep_table(std::span<const SweepRow> rows, std::string_view parameter);
Table surface_table(std::span<const SweepRow> rows);
Table deviation_table(std::span<const DeviationReport> reports);
Table payoff_table(std::span<const double> payoffs);

/// Runs a validated config: prints a summary to `out` and writes the result
/// table when an output path is set.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs them. Usage errors exit
/// with kExitUsage, numerical or I/O failures with kExitFailure.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qmg
