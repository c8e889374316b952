// Equilibrium and optimality analysis of minority games.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qmg/game.hpp"

namespace qmg {

inline constexpr double kNashTolerance = 1e-4;
inline constexpr double kParetoMargin = 1e-10;

// Closed-form payoffs for six players at the GHZ equilibrium strategy.

/// GHZ/Bell mixture without noise: 1/4 + x^2/16.
double mixture_equilibrium_payoff(double x);

/// GHZ/Bell mixture with fidelity f: (3 + f + f x^2) / 16.
double noisy_mixture_equilibrium_payoff(double x, double f);

/// Conjectured N-player payoff on the exponential-entangler state:
/// (C - Q/2)(cos g/2 - sin g/2)^2 + (Q/2)(cos g/2 + sin g/2)^2.
double entangler_payoff_conjecture(double gamma, double classical, double quantum);

/// M(pi/2, -pi/(2n), pi/(2n)): M(pi/2,-pi/8,pi/8) for four players and
/// M(pi/2,-pi/12,pi/12) for six.
StrategyParams ghz_equilibrium_strategy(int n);

/// The GHZ equilibrium strategy adjusted for the i phase carried by the
/// exponential-entangler state: M(pi/2, -pi/(4n), pi/(4n)).
StrategyParams entangler_equilibrium_strategy(int n);

/// M(pi/4, 0, 0).
StrategyParams bell_region_strategy();

/// Default equilibrium candidate for a state family.
StrategyParams default_equilibrium_strategy(StateFamily family, int n);

struct SearchOptions {
  int grid_resolution = 25;
  double min_step = 1e-6;
  double tolerance = kNashTolerance;
};

struct BoxSearchResult {
  StrategyParams best;
  double value = 0.0;
  double grid_value = 0.0;
  int refinement_steps = 0;
  std::vector<double> trace;  // best value after the grid and each refinement step
};

/// Maximizes `objective` over theta in [0,pi], alpha and beta in [-pi,pi]:
/// a grid_resolution^3 grid evaluated in parallel, then coordinate-wise
/// interval shrinking around the grid optimum until the step is below
/// `min_step`.
BoxSearchResult maximize_over_strategy_box(const std::function<double(const StrategyParams&)>& objective,
                                           int grid_resolution, double min_step);

struct DeviationReport {
  StrategyProfile candidate;
  int player = 1;
  StrategyParams best_deviation;
  double best_deviation_payoff = 0.0;
  double equilibrium_payoff = 0.0;
  double max_gain = 0.0;
  bool is_nash_within_tol = false;
  int grid_resolution = 0;
  int refinement_steps = 0;
  std::vector<double> refinement_trace;
};

/// Best unilateral deviation of `player` while the others keep `candidate`.
DeviationReport best_response(const MinorityGame& game, const StrategyProfile& candidate, int player,
                              const SearchOptions& options = {});

struct NashReport {
  std::vector<DeviationReport> players;
  double max_gain = 0.0;
  bool is_nash = false;
};

/// Runs best_response for every player.
NashReport nash_check(const MinorityGame& game, const StrategyProfile& candidate, const SearchOptions& options = {});

struct SymmetricOptimum {
  StrategyParams strategy;
  double payoff = 0.0;
  int refinement_steps = 0;
};

/// Best payoff when every player plays the same strategy.
SymmetricOptimum symmetric_optimum(const MinorityGame& game, const SearchOptions& options = {});

enum class ParetoRelation { ADominates, BDominates, Equal, Incomparable };

std::string_view to_string(ParetoRelation relation);

ParetoRelation pareto_compare(std::span<const double> a, std::span<const double> b);

struct SweepRow {
  std::optional<double> x;
  std::optional<double> f;
  std::optional<double> gamma;
  std::optional<double> theta;
  std::optional<double> alpha;
  std::optional<double> beta;
  double payoff_simulated = 0.0;
  std::optional<double> payoff_analytic;
  std::optional<double> abs_error;
};

/// Player 1's payoff with every player on M(theta, alpha, -alpha), over
/// theta in [0,pi] and alpha in [-pi,pi].
std::vector<SweepRow> payoff_surface(const MinorityGame& game, int theta_steps, int alpha_steps);

/// GHZ/Bell mixture, x over [0,1] at fixed f, all players on `strategy`.
/// The closed form is attached for six players.
std::vector<SweepRow> sweep_x(int n, double f, int steps, const StrategyParams& strategy);

/// GHZ/Bell mixture, f over [0,1] at fixed x.
std::vector<SweepRow> sweep_f(int n, double x, int steps, const StrategyParams& strategy);

/// Exponential-entangler state, gamma over [0,pi/2], compared against the
/// conjectured formula with the given classical and quantum payoffs.
std::vector<SweepRow> sweep_gamma(int n, int steps, double classical, double quantum, const StrategyParams& strategy);

/// Simulated payoff on the maximally entangled exponential state
/// (gamma = pi/2) with all players on `strategy`.
double entangler_quantum_payoff(int n, const StrategyParams& strategy);

}  // namespace qmg
