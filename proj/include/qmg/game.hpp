// Quantum minority game engine.
//
// Each player holds one qubit of a shared initial state and applies a local
// SU(2) strategy operator M(theta, alpha, beta). A player wins one unit when
// the measured outcome puts them in the strict minority; ties and unanimous
// outcomes pay nobody.

#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <span>
#include <vector>

#include "qmg/core.hpp"
#include "qmg/states.hpp"

namespace qmg {

using Rational = boost::rational<std::int64_t>;

/// theta in [0, pi], alpha and beta in [-pi, pi].
struct StrategyParams {
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  void validate() const;
  bool operator==(const StrategyParams&) const = default;
};

/// M(theta, alpha, beta) =
///   [ e^{i alpha} cos(theta/2)     i e^{i beta} sin(theta/2) ]
///   [ i e^{-i beta} sin(theta/2)   e^{-i alpha} cos(theta/2) ]
LocalUnitary strategy_unitary(const StrategyParams& p);

class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::vector<StrategyParams> strategies);
  static StrategyProfile symmetric(int n_players, const StrategyParams& p);

  int size() const { return static_cast<int>(strategies_.size()); }
  /// 1-based player index.
  const StrategyParams& player(int player) const;
  std::span<const StrategyParams> strategies() const { return strategies_; }
  StrategyProfile with_player(int player, const StrategyParams& p) const;

  bool operator==(const StrategyProfile&) const = default;

 private:
  std::vector<StrategyParams> strategies_;
};

/// Players (1-based) in the strict minority for an N-bit outcome, where
/// player 1 is the most significant bit.
std::vector<int> minority_winners(BasisIndex outcome, int n);

struct MinorityProjector {
  int player = 1;
  std::vector<BasisIndex> winning_indices;  // ascending
};

MinorityProjector minority_projector(int n, int player);

/// Exact payoff of uniformly random classical play.
Rational classical_payoff(int n);

/// floor((n-1)/2) / n: largest minority group shared evenly.
Rational max_symmetric_payoff(int n);

struct GameSpec {
  int n_players = 6;
  InitialStateRecipe recipe;

  void validate() const;
};

/// Final state: each player's operator applied on their own qubit.
PureState final_state(const PureState& initial, const StrategyProfile& profile);
MixedState final_state(const MixedState& initial, const StrategyProfile& profile);
GameState final_state(const GameState& initial, const StrategyProfile& profile);

/// A game with its initial state and projectors prepared once.
///
/// Noise is handled without density matrices: conjugation by a unitary fixes
/// the identity component, so Tr[U rho U^dagger P] = f <psi_fin|P|psi_fin> +
/// (1 - f) |P| / 2^N.
class MinorityGame {
 public:
  explicit MinorityGame(GameSpec spec);

  const GameSpec& spec() const { return spec_; }
  int n_players() const { return spec_.n_players; }
  const PureState& initial_pure() const { return initial_; }
  const MinorityProjector& projector(int player) const;

  double payoff(const StrategyProfile& profile, int player) const;
  std::vector<double> payoffs(const StrategyProfile& profile) const;

  /// Payoff of `player` on a final pure state, with the noise correction.
  double payoff_from_final(const PureState& final_pure, int player) const;

  /// Initial state with every player except `player` already applied.
  /// Local operators on distinct qubits commute, so the deviating player's
  /// operator can be applied last.
  PureState others_applied(const StrategyProfile& profile, int player) const;

  /// Payoff of `player` playing `deviation` against a state from
  /// others_applied().
  double deviation_payoff(const PureState& others_applied_state, int player, const StrategyParams& deviation) const;

 private:
  void check_player(int player) const;
  void check_profile(const StrategyProfile& profile) const;

  GameSpec spec_;
  PureState initial_;
  std::vector<MinorityProjector> projectors_;
};

double expected_payoff(const GameSpec& spec, const StrategyProfile& profile, int player);

}  // namespace qmg
