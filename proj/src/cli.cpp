#include "qmg/cli.hpp"

#include <algorithm>
#include <numbers>
#include <fmt/format.h>

#include "qmg/parallel.hpp"

namespace qmg {

namespace {

Cell optional_cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

StrategyParams shared_strategy(const RunConfig& c, StrategyParams fallback) {
  if (c.strategies.empty()) return fallback;
  if (std::ranges::all_of(c.strategies, [&](const StrategyParams& s) { return s == c.strategies.front(); })) {
    return c.strategies.front();
  }
  throw DomainError("profile", "sweeps need a symmetric strategy (use --symmetric)");
}

double max_error(std::span<const SweepRow> rows) {
  double worst = 0.0;
  for (const auto& r : rows) {
    if (r.abs_error) worst = std::max(worst, *r.abs_error);
  }
  return worst;
}

std::string describe_game(const RunConfig& c) {
  std::string s = fmt::format("n={}, state={}", c.n, to_string(c.state));
  if (c.state == StateFamily::GhzBellMixture) s += fmt::format(", x={}", format_number(c.x));
  if (c.state == StateFamily::ExponentialEntangler) s += fmt::format(", gamma={}", format_number(c.gamma));
  if (c.f != 1.0) s += fmt::format(", f={}", format_number(c.f));
  return s;
}

void write_output(const RunConfig& c, const Table& table, std::ostream& out) {
  if (c.output_path.empty()) return;
  emit_table(table, c.output_format, c.output_path);
  out << fmt::format("wrote {} rows to {} ({})\n", table.rows.size(), c.output_path, to_string(c.output_format));
}

int run_payoff(const RunConfig& c, std::ostream& out) {
  const MinorityGame game(c.game_spec());
  const std::vector<double> payoffs = game.payoffs(c.profile());
  std::string listing;
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    listing += fmt::format("{}p{}={}", i ? ", " : "", i + 1, format_number(payoffs[i]));
  }
  out << fmt::format("payoff ({}): {}\n", describe_game(c), listing);
  write_output(c, payoff_table(payoffs), out);
  return kExitOk;
}

int run_surface(const RunConfig& c, std::ostream& out) {
  const MinorityGame game(c.game_spec());
  const auto rows = payoff_surface(game, c.theta_steps, c.alpha_steps);
  const auto best = std::ranges::max_element(rows, {}, &SweepRow::payoff_simulated);
  out << fmt::format("surface ({}), {}x{} grid over M(theta, alpha, -alpha): max payoff {} at theta={}, alpha={}\n",
                     describe_game(c), c.theta_steps, c.alpha_steps, format_number(best->payoff_simulated),
                     format_number(*best->theta), format_number(*best->alpha));
  write_output(c, surface_table(rows), out);
  return kExitOk;
}

int run_best_response(const RunConfig& c, std::ostream& out) {
  const MinorityGame game(c.game_spec());
  const SearchOptions options{c.grid, 1e-6, c.tolerance};
  const DeviationReport r = best_response(game, c.profile(), c.player, options);
  out << fmt::format(
      "best-response ({}), player {}: best deviation M({}, {}, {}) pays {} vs {} at the candidate, "
      "max_gain={}, is_nash={}\n",
      describe_game(c), c.player, format_number(r.best_deviation.theta), format_number(r.best_deviation.alpha),
      format_number(r.best_deviation.beta), format_number(r.best_deviation_payoff), format_number(r.equilibrium_payoff),
      format_number(r.max_gain), r.is_nash_within_tol);
  const DeviationReport reports[] = {r};
  write_output(c, deviation_table(reports), out);
  return kExitOk;
}

int run_nash_check(const RunConfig& c, std::ostream& out) {
  const MinorityGame game(c.game_spec());
  const SearchOptions options{c.grid, 1e-6, c.tolerance};
  const NashReport report = nash_check(game, c.profile(), options);
  const std::string relation = report.is_nash ? "<=" : ">";
  out << fmt::format("nash-check ({}), {}^3 grid + refinement: is_nash={}, max_gain={} ({} tolerance {})\n",
                     describe_game(c), c.grid, report.is_nash, format_number(report.max_gain), relation,
                     format_number(c.tolerance));
  write_output(c, deviation_table(report.players), out);
  return kExitOk;
}

int run_sweep(const RunConfig& c, std::ostream& out) {
  std::vector<SweepRow> rows;
  std::string parameter;
  if (c.command == Command::SweepX) {
    parameter = "x";
    rows = sweep_x(c.n, c.f, c.steps, shared_strategy(c, ghz_equilibrium_strategy(c.n)));
    out << fmt::format("sweep-x (n={}, f={}, {} steps)", c.n, format_number(c.f), c.steps);
  } else if (c.command == Command::SweepF) {
    parameter = "f";
    rows = sweep_f(c.n, c.x, c.steps, shared_strategy(c, ghz_equilibrium_strategy(c.n)));
    out << fmt::format("sweep-f (n={}, x={}, {} steps)", c.n, format_number(c.x), c.steps);
  } else {
    parameter = "gamma";
    const StrategyParams strategy = shared_strategy(c, entangler_equilibrium_strategy(c.n));
    const double classical = c.classical_payoff.value_or(boost::rational_cast<double>(classical_payoff(c.n)));
    const double quantum = c.quantum_payoff.value_or(entangler_quantum_payoff(c.n, strategy));
    rows = sweep_gamma(c.n, c.steps, classical, quantum, strategy);
    out << fmt::format("sweep-gamma (n={}, {} steps, C={}, Q={})", c.n, c.steps, format_number(classical),
                       format_number(quantum));
  }
  const bool analytic = std::ranges::any_of(rows, [](const SweepRow& r) { return r.abs_error.has_value(); });
  if (analytic) {
    out << fmt::format(": max |simulated - analytic| = {}\n", format_number(max_error(rows)));
  } else {
    out << ": no closed form for this player count, simulated values only\n";
  }
  write_output(c, sweep_table(rows, parameter), out);
  return kExitOk;
}

int run_classical(const RunConfig& c, std::ostream& out) {
  const Rational p = classical_payoff(c.n);
  out << fmt::format("classical payoff (n={}): {}/{} = {}\n", c.n, p.numerator(), p.denominator(),
                     format_number(boost::rational_cast<double>(p)));
  Table t{{"n", "numerator", "denominator", "payoff"}, {}};
  t.add_row({std::int64_t{c.n}, p.numerator(), p.denominator(), boost::rational_cast<double>(p)});
  write_output(c, t, out);
  return kExitOk;
}

int run_conjecture(const RunConfig& c, std::ostream& out) {
  const StrategyParams strategy = shared_strategy(c, entangler_equilibrium_strategy(c.n));
  const double classical = c.classical_payoff.value_or(boost::rational_cast<double>(classical_payoff(c.n)));
  const double quantum = c.quantum_payoff.value_or(entangler_quantum_payoff(c.n, strategy));
  const double formula = entangler_payoff_conjecture(c.gamma, classical, quantum);
  const MinorityGame game(GameSpec{c.n, InitialStateRecipe{StateFamily::ExponentialEntangler, c.n, 1.0, 1.0, c.gamma}});
  SweepRow row;
  row.gamma = c.gamma;
  row.payoff_simulated = game.payoff(StrategyProfile::symmetric(c.n, strategy), 1);
  row.payoff_analytic = formula;
  row.abs_error = std::abs(row.payoff_simulated - formula);
  out << fmt::format("conjecture (n={}, gamma={}, C={}, Q={}): formula {}, simulated {}, |error| {}\n", c.n,
                     format_number(c.gamma), format_number(classical), format_number(quantum), format_number(formula),
                     format_number(row.payoff_simulated), format_number(*row.abs_error));
  const SweepRow rows[] = {row};
  write_output(c, sweep_table(rows, "gamma"), out);
  return kExitOk;
}

}  // namespace

Table sweep_table(std::span<const SweepRow> rows, std::string_view parameter) {
  Table t{{std::string(parameter), "payoff_simulated", "payoff_analytic", "abs_error"}, {}};
  for (const auto& r : rows) {
    const std::optional<double>& p = parameter == "x" ? r.x : parameter == "f" ? r.f : r.gamma;
    t.add_row({optional_cell(p), r.payoff_simulated, optional_cell(r.payoff_analytic), optional_cell(r.abs_error)});
  }
  return t;
}

Table surface_table(std::span<const SweepRow> rows) {
  Table t{{"theta", "alpha", "beta", "payoff_simulated"}, {}};
  for (const auto& r : rows) {
    t.add_row({optional_cell(r.theta), optional_cell(r.alpha), optional_cell(r.beta), r.payoff_simulated});
  }
  return t;
}

Table deviation_table(std::span<const DeviationReport> reports) {
  Table t{{"player", "theta", "alpha", "beta", "best_deviation_payoff", "equilibrium_payoff", "max_gain",
           "is_nash_within_tol", "grid_resolution", "refinement_steps"},
          {}};
  for (const auto& r : reports) {
    t.add_row({std::int64_t{r.player}, r.best_deviation.theta, r.best_deviation.alpha, r.best_deviation.beta,
               r.best_deviation_payoff, r.equilibrium_payoff, r.max_gain, r.is_nash_within_tol,
               std::int64_t{r.grid_resolution}, std::int64_t{r.refinement_steps}});
  }
  return t;
}

Table payoff_table(std::span<const double> payoffs) {
  Table t{{"player", "payoff"}, {}};
  for (std::size_t i = 0; i < payoffs.size(); ++i) t.add_row({static_cast<std::int64_t>(i + 1), payoffs[i]});
  return t;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Payoff: return run_payoff(config, out);
      case Command::Surface: return run_surface(config, out);
      case Command::BestResponse: return run_best_response(config, out);
      case Command::NashCheck: return run_nash_check(config, out);
      case Command::SweepX:
      case Command::SweepF:
      case Command::SweepGamma: return run_sweep(config, out);
      case Command::Classical: return run_classical(config, out);
      case Command::Conjecture: return run_conjecture(config, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_config(args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    err << "usage: qmg <payoff|surface|best-response|nash-check|sweep-x|sweep-f|sweep-gamma|classical|conjecture> "
           "[--n N] [--state ghz|bell|mixture|exponential|w3] [--x X] [--f F] [--gamma G] "
           "[--symmetric T,A,B | --profile T,A,B;...] [--player P] [--grid G] [--theta-steps S] [--alpha-steps S] "
           "[--steps S] [--tolerance T] [--c-payoff C] [--q-payoff Q] [--out PATH] [--format csv|json] "
           "[--config PATH]\n";
    return kExitUsage;
  }
  parallel::configure_from_env();
  return run(config, out, err);
}

}  // namespace qmg
