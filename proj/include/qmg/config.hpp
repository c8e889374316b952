// Run configuration for the command-line tool.
//
// Options come from flags and, optionally, a `--config <path>` file of
// `key = value` lines whose keys are the flag names without dashes. Flags
// override file values.

#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmg/game.hpp"
#include "qmg/states.hpp"
#include "qmg/table.hpp"

namespace qmg {

enum class Command { Payoff, Surface, BestResponse, NashCheck, SweepX, SweepF, SweepGamma, Classical, Conjecture };

std::string_view to_string(Command command);
Command parse_command(std::string_view name);

struct RunConfig {
  Command command = Command::Payoff;
  int n = 6;
  StateFamily state = StateFamily::Ghz;
  double x = 1.0;
  double f = 1.0;
  double gamma = std::numbers::pi / 2;
  /// Empty: the family's default equilibrium strategy. One entry: every
  /// player uses it. Otherwise one entry per player.
  std::vector<StrategyParams> strategies;
  int player = 1;
  int grid = 25;
  int theta_steps = 25;
  int alpha_steps = 25;
  int steps = 11;
  double tolerance = 1e-4;
  std::optional<double> classical_payoff;
  std::optional<double> quantum_payoff;
  std::string output_path;
  OutputFormat output_format = OutputFormat::Csv;

  bool operator==(const RunConfig&) const = default;

  InitialStateRecipe recipe() const { return {state, n, x, f, gamma}; }
  GameSpec game_spec() const { return {n, recipe()}; }
  StrategyProfile profile() const;
};

/// Decimal radians or a multiple of pi: "pi", "-pi/8", "3pi/4", "3*pi/4".
double parse_angle(std::string_view token, std::string_view field);

/// "theta,alpha,beta".
StrategyParams parse_strategy(std::string_view token, std::string_view field);

/// `args` excludes the program name; the command is the first token unless
/// the config text supplies it. Throws DomainError naming the offending field.
RunConfig parse_config(std::span<const std::string> args, std::optional<std::string_view> config_text = std::nullopt);

/// Config-file text that parses back to an equal RunConfig.
std::string render_config(const RunConfig& config);

}  // namespace qmg
