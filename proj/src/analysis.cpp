#include "qmg/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <fmt/format.h>

#include "qmg/parallel.hpp"

namespace qmg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxRefinementSteps = 100000;

void require_unit(const char* field, double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError(field, fmt::format("must be in [0, 1], got {}", v));
}

void require_steps(const char* field, int steps) {
  if (steps < 2) throw DomainError(field, fmt::format("must be >= 2, got {}", steps));
}

double grid_point(double lo, double hi, int i, int steps) {
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

}  // namespace

double mixture_equilibrium_payoff(double x) {
  require_unit("x", x);
  return 0.25 + x * x / 16.0;
}

double noisy_mixture_equilibrium_payoff(double x, double f) {
  require_unit("x", x);
  require_unit("f", f);
  return (3.0 + f + f * x * x) / 16.0;
}

double entangler_payoff_conjecture(double gamma, double classical, double quantum) {
  if (!(gamma >= 0.0 && gamma <= kPi / 2)) throw DomainError("gamma", fmt::format("must be in [0, pi/2], got {}", gamma));
  require_unit("classical payoff", classical);
  require_unit("quantum payoff", quantum);
  const double c = std::cos(gamma / 2);
  const double s = std::sin(gamma / 2);
  return (classical - quantum / 2) * (c - s) * (c - s) + quantum / 2 * (c + s) * (c + s);
}

StrategyParams ghz_equilibrium_strategy(int n) {
  if (n < 2) throw DomainError("n", fmt::format("must be >= 2, got {}", n));
  return {kPi / 2, -kPi / (2.0 * n), kPi / (2.0 * n)};
}

StrategyParams entangler_equilibrium_strategy(int n) {
  if (n < 2) throw DomainError("n", fmt::format("must be >= 2, got {}", n));
  return {kPi / 2, -kPi / (4.0 * n), kPi / (4.0 * n)};
}

StrategyParams bell_region_strategy() { return {kPi / 4, 0.0, 0.0}; }

StrategyParams default_equilibrium_strategy(StateFamily family, int n) {
  return family == StateFamily::ExponentialEntangler ? entangler_equilibrium_strategy(n) : ghz_equilibrium_strategy(n);
}

// Box search

BoxSearchResult maximize_over_strategy_box(const std::function<double(const StrategyParams&)>& objective,
                                           int grid_resolution, double min_step) {
  require_steps("grid", grid_resolution);
  if (!(min_step > 0.0)) throw DomainError("min_step", "must be positive");

  const auto g = static_cast<std::size_t>(grid_resolution);
  const auto at = [&](std::size_t k) {
    const int i = static_cast<int>(k / (g * g));
    const int j = static_cast<int>((k / g) % g);
    const int l = static_cast<int>(k % g);
    return StrategyParams{grid_point(0.0, kPi, i, grid_resolution), grid_point(-kPi, kPi, j, grid_resolution),
                          grid_point(-kPi, kPi, l, grid_resolution)};
  };
  const std::vector<double> values = parallel::parallel_map(g * g * g, [&](std::size_t k) { return objective(at(k)); });

  // First maximum by grid index, so ties resolve deterministically.
  const auto best_it = std::max_element(values.begin(), values.end());
  BoxSearchResult result;
  result.best = at(static_cast<std::size_t>(best_it - values.begin()));
  result.value = *best_it;
  result.grid_value = *best_it;
  result.trace.push_back(result.value);

  const std::array<double, 3> lo{0.0, -kPi, -kPi};
  const std::array<double, 3> hi{kPi, kPi, kPi};
  std::array<double, 3> step{kPi / (grid_resolution - 1), 2 * kPi / (grid_resolution - 1),
                             2 * kPi / (grid_resolution - 1)};
  std::array<double, 3> point{result.best.theta, result.best.alpha, result.best.beta};
  const auto as_params = [](const std::array<double, 3>& p) { return StrategyParams{p[0], p[1], p[2]}; };

  while (*std::max_element(step.begin(), step.end()) >= min_step && result.refinement_steps < kMaxRefinementSteps) {
    bool improved = false;
    for (int c = 0; c < 3; ++c) {
      for (double sign : {1.0, -1.0}) {
        std::array<double, 3> trial = point;
        trial[c] = std::clamp(point[c] + sign * step[c], lo[c], hi[c]);
        if (trial[c] == point[c]) continue;
        const double v = objective(as_params(trial));
        if (v > result.value) {
          result.value = v;
          point = trial;
          improved = true;
        }
      }
    }
    if (!improved) {
      for (double& s : step) s /= 2;
    }
    ++result.refinement_steps;
    result.trace.push_back(result.value);
  }
  result.best = as_params(point);
  return result;
}

DeviationReport best_response(const MinorityGame& game, const StrategyProfile& candidate, int player,
                              const SearchOptions& options) {
  const PureState rest = game.others_applied(candidate, player);
  const double equilibrium = game.payoff(candidate, player);
  const BoxSearchResult search = maximize_over_strategy_box(
      [&](const StrategyParams& p) { return game.deviation_payoff(rest, player, p); }, options.grid_resolution,
      options.min_step);

  DeviationReport report;
  report.candidate = candidate;
  report.player = player;
  report.best_deviation = search.best;
  report.best_deviation_payoff = search.value;
  report.equilibrium_payoff = equilibrium;
  report.max_gain = search.value - equilibrium;
  report.is_nash_within_tol = report.max_gain <= options.tolerance;
  report.grid_resolution = options.grid_resolution;
  report.refinement_steps = search.refinement_steps;
  report.refinement_trace = search.trace;
  return report;
}

NashReport nash_check(const MinorityGame& game, const StrategyProfile& candidate, const SearchOptions& options) {
  NashReport report;
  report.max_gain = -std::numeric_limits<double>::infinity();
  for (int p = 1; p <= game.n_players(); ++p) {
    report.players.push_back(best_response(game, candidate, p, options));
    report.max_gain = std::max(report.max_gain, report.players.back().max_gain);
  }
  report.is_nash = report.max_gain <= options.tolerance;
  return report;
}

SymmetricOptimum symmetric_optimum(const MinorityGame& game, const SearchOptions& options) {
  const int n = game.n_players();
  const BoxSearchResult search = maximize_over_strategy_box(
      [&](const StrategyParams& p) { return game.payoff(StrategyProfile::symmetric(n, p), 1); },
      options.grid_resolution, options.min_step);
  return {search.best, search.value, search.refinement_steps};
}

// Pareto

std::string_view to_string(ParetoRelation relation) {
  switch (relation) {
    case ParetoRelation::ADominates: return "a_dominates";
    case ParetoRelation::BDominates: return "b_dominates";
    case ParetoRelation::Equal: return "equal";
    case ParetoRelation::Incomparable: return "incomparable";
  }
  return "?";
}

ParetoRelation pareto_compare(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(fmt::format("payoff vectors differ in length ({} vs {})", a.size(), b.size()));
  }
  bool a_better = false;
  bool b_better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i] + kParetoMargin) a_better = true;
    if (b[i] > a[i] + kParetoMargin) b_better = true;
  }
  if (a_better && b_better) return ParetoRelation::Incomparable;
  if (a_better) return ParetoRelation::ADominates;
  if (b_better) return ParetoRelation::BDominates;
  return ParetoRelation::Equal;
}

// Surfaces and sweeps

std::vector<SweepRow> payoff_surface(const MinorityGame& game, int theta_steps, int alpha_steps) {
  require_steps("theta_steps", theta_steps);
  require_steps("alpha_steps", alpha_steps);
  const int n = game.n_players();
  const auto count = static_cast<std::size_t>(theta_steps) * static_cast<std::size_t>(alpha_steps);
  return parallel::parallel_map(count, [&](std::size_t k) {
    const int i = static_cast<int>(k / static_cast<std::size_t>(alpha_steps));
    const int j = static_cast<int>(k % static_cast<std::size_t>(alpha_steps));
    const double theta = grid_point(0.0, kPi, i, theta_steps);
    const double alpha = grid_point(-kPi, kPi, j, alpha_steps);
    SweepRow row;
    row.theta = theta;
    row.alpha = alpha;
    row.beta = -alpha;
    row.payoff_simulated = game.payoff(StrategyProfile::symmetric(n, {theta, alpha, -alpha}), 1);
    return row;
  });
}

namespace {

SweepRow mixture_row(int n, double x, double f, const StrategyParams& strategy) {
  GameSpec spec{n, InitialStateRecipe{StateFamily::GhzBellMixture, n, x, f, kPi / 2}};
  const MinorityGame game(spec);
  SweepRow row;
  row.x = x;
  row.f = f;
  row.payoff_simulated = game.payoff(StrategyProfile::symmetric(n, strategy), 1);
  if (n == 6) {
    row.payoff_analytic = f == 1.0 ? mixture_equilibrium_payoff(x) : noisy_mixture_equilibrium_payoff(x, f);
    row.abs_error = std::abs(row.payoff_simulated - *row.payoff_analytic);
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_x(int n, double f, int steps, const StrategyParams& strategy) {
  require_steps("steps", steps);
  require_unit("f", f);
  return parallel::parallel_map(static_cast<std::size_t>(steps), [&](std::size_t i) {
    return mixture_row(n, grid_point(0.0, 1.0, static_cast<int>(i), steps), f, strategy);
  });
}

std::vector<SweepRow> sweep_f(int n, double x, int steps, const StrategyParams& strategy) {
  require_steps("steps", steps);
  require_unit("x", x);
  return parallel::parallel_map(static_cast<std::size_t>(steps), [&](std::size_t i) {
    return mixture_row(n, x, grid_point(0.0, 1.0, static_cast<int>(i), steps), strategy);
  });
}

double entangler_quantum_payoff(int n, const StrategyParams& strategy) {
  const MinorityGame game(GameSpec{n, InitialStateRecipe{StateFamily::ExponentialEntangler, n, 1.0, 1.0, kPi / 2}});
  return game.payoff(StrategyProfile::symmetric(n, strategy), 1);
}

std::vector<SweepRow> sweep_gamma(int n, int steps, double classical, double quantum, const StrategyParams& strategy) {
  require_steps("steps", steps);
  require_unit("classical payoff", classical);
  require_unit("quantum payoff", quantum);
  return parallel::parallel_map(static_cast<std::size_t>(steps), [&](std::size_t i) {
    const double gamma = grid_point(0.0, kPi / 2, static_cast<int>(i), steps);
    const MinorityGame game(GameSpec{n, InitialStateRecipe{StateFamily::ExponentialEntangler, n, 1.0, 1.0, gamma}});
    SweepRow row;
    row.gamma = gamma;
    row.payoff_simulated = game.payoff(StrategyProfile::symmetric(n, strategy), 1);
    row.payoff_analytic = entangler_payoff_conjecture(gamma, classical, quantum);
    row.abs_error = std::abs(row.payoff_simulated - *row.payoff_analytic);
    return row;
  });
}

}  // namespace qmg
