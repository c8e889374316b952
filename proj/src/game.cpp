#include "qmg/game.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <fmt/format.h>

namespace qmg {

namespace {

constexpr double kPi = std::numbers::pi;

void require_range(const char* field, double value, double lo, double hi) {
  if (!(value >= lo && value <= hi)) {
    throw DomainError(field, fmt::format("must be in [{}, {}], got {}", lo, hi, value));
  }
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void StrategyParams::validate() const {
  require_range("theta", theta, 0.0, kPi);
  require_range("alpha", alpha, -kPi, kPi);
  require_range("beta", beta, -kPi, kPi);
}

LocalUnitary strategy_unitary(const StrategyParams& p) {
  p.validate();
  const double c = std::cos(p.theta / 2);
  const double s = std::sin(p.theta / 2);
  const Complex i{0.0, 1.0};
  return LocalUnitary({std::polar(c, p.alpha), i * std::polar(s, p.beta), i * std::polar(s, -p.beta),
                       std::polar(c, -p.alpha)});
}

StrategyProfile::StrategyProfile(std::vector<StrategyParams> strategies) : strategies_(std::move(strategies)) {
  for (const auto& s : strategies_) s.validate();
}

StrategyProfile StrategyProfile::symmetric(int n_players, const StrategyParams& p) {
  if (n_players < 1) throw DomainError("n", "profile needs at least one player");
  return StrategyProfile(std::vector<StrategyParams>(static_cast<std::size_t>(n_players), p));
}

const StrategyParams& StrategyProfile::player(int player) const {
  if (player < 1 || player > size()) throw std::out_of_range(fmt::format("player {} out of range", player));
  return strategies_[static_cast<std::size_t>(player - 1)];
}

StrategyProfile StrategyProfile::with_player(int player, const StrategyParams& p) const {
  if (player < 1 || player > size()) throw std::out_of_range(fmt::format("player {} out of range", player));
  StrategyProfile out = *this;
  p.validate();
  out.strategies_[static_cast<std::size_t>(player - 1)] = p;
  return out;
}

std::vector<int> minority_winners(BasisIndex outcome, int n) {
  const int ones = std::popcount(outcome);
  std::vector<int> winners;
  int winning_bit;
  if (2 * ones < n && ones > 0) {
    winning_bit = 1;
  } else if (2 * ones > n && ones < n) {
    winning_bit = 0;
  } else {
    return winners;
  }
  for (int player = 1; player <= n; ++player) {
    const int bit = static_cast<int>((outcome >> bit_of(player - 1, n)) & 1U);
    if (bit == winning_bit) winners.push_back(player);
  }
  return winners;
}

MinorityProjector minority_projector(int n, int player) {
  check_qubit_count(n);
  if (player < 1 || player > n) throw std::out_of_range(fmt::format("player {} out of range for {} players", player, n));
  MinorityProjector proj{player, {}};
  const BasisIndex dim = BasisIndex{1} << n;
  for (BasisIndex b = 0; b < dim; ++b) {
    const auto winners = minority_winners(b, n);
    if (std::ranges::find(winners, player) != winners.end()) proj.winning_indices.push_back(b);
  }
  return proj;
}

Rational classical_payoff(int n) {
  if (n < 2 || n > 62) throw DomainError("n", fmt::format("must be in [2, 62], got {}", n));
  // Player holds 1 and is among c ones with c < n/2, or holds 0 and the other
  // n-1 players hold c > n/2 ones.
  std::int64_t wins = 0;
  for (int c = 1; 2 * c < n; ++c) wins += binomial(n - 1, c - 1);
  for (int c = 0; c < n; ++c) {
    if (2 * c > n) wins += binomial(n - 1, c);
  }
  return Rational(wins, std::int64_t{1} << n);
}

Rational max_symmetric_payoff(int n) {
  if (n < 2) throw DomainError("n", fmt::format("must be >= 2, got {}", n));
  return Rational((n - 1) / 2, n);
}

void GameSpec::validate() const {
  if (n_players < 2) throw DomainError("n", fmt::format("must be >= 2, got {}", n_players));
  if (recipe.n_qubits != n_players) {
    throw DomainError("n", fmt::format("recipe has {} qubits for {} players", recipe.n_qubits, n_players));
  }
  recipe.validate();
}

namespace {

void check_profile_length(const StrategyProfile& profile, int n_qubits) {
  if (profile.size() != n_qubits) {
    throw std::invalid_argument(
        fmt::format("profile has {} strategies for a {}-qubit state", profile.size(), n_qubits));
  }
}

}  // namespace

PureState final_state(const PureState& initial, const StrategyProfile& profile) {
  check_profile_length(profile, initial.n_qubits());
  PureState state = initial;
  for (int q = 0; q < profile.size(); ++q) state = apply_local(state, strategy_unitary(profile.player(q + 1)), q);
  return state;
}

MixedState final_state(const MixedState& initial, const StrategyProfile& profile) {
  check_profile_length(profile, initial.n_qubits());
  MixedState state = initial;
  for (int q = 0; q < profile.size(); ++q) {
    state = apply_local_mixed(state, strategy_unitary(profile.player(q + 1)), q);
  }
  return state;
}

GameState final_state(const GameState& initial, const StrategyProfile& profile) {
  return std::visit([&](const auto& s) -> GameState { return final_state(s, profile); }, initial);
}

// MinorityGame

namespace {

const GameSpec& validated(const GameSpec& spec) {
  spec.validate();
  return spec;
}

}  // namespace

MinorityGame::MinorityGame(GameSpec spec) : spec_(validated(spec)), initial_(build_pure_part(spec_.recipe)) {
  projectors_.reserve(static_cast<std::size_t>(spec_.n_players));
  for (int p = 1; p <= spec_.n_players; ++p) projectors_.push_back(minority_projector(spec_.n_players, p));
}

void MinorityGame::check_player(int player) const {
  if (player < 1 || player > spec_.n_players) {
    throw std::out_of_range(fmt::format("player {} out of range for {} players", player, spec_.n_players));
  }
}

void MinorityGame::check_profile(const StrategyProfile& profile) const {
  check_profile_length(profile, spec_.n_players);
}

const MinorityProjector& MinorityGame::projector(int player) const {
  check_player(player);
  return projectors_[static_cast<std::size_t>(player - 1)];
}

double MinorityGame::payoff_from_final(const PureState& final_pure, int player) const {
  const auto& winning = projector(player).winning_indices;
  const double pure = diagonal_expectation(final_pure, winning);
  const double f = spec_.recipe.f;
  if (f == 1.0) return pure;
  const double uniform = static_cast<double>(winning.size()) / static_cast<double>(final_pure.dimension());
  return f * pure + (1.0 - f) * uniform;
}

double MinorityGame::payoff(const StrategyProfile& profile, int player) const {
  check_profile(profile);
  return payoff_from_final(final_state(initial_, profile), player);
}

std::vector<double> MinorityGame::payoffs(const StrategyProfile& profile) const {
  check_profile(profile);
  const PureState fin = final_state(initial_, profile);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(spec_.n_players));
  for (int p = 1; p <= spec_.n_players; ++p) out.push_back(payoff_from_final(fin, p));
  return out;
}

PureState MinorityGame::others_applied(const StrategyProfile& profile, int player) const {
  check_profile(profile);
  check_player(player);
  PureState state = initial_;
  for (int q = 0; q < profile.size(); ++q) {
    if (q + 1 == player) continue;
    state = apply_local(state, strategy_unitary(profile.player(q + 1)), q);
  }
  return state;
}

double MinorityGame::deviation_payoff(const PureState& others_applied_state, int player,
                                      const StrategyParams& deviation) const {
  check_player(player);
  return payoff_from_final(apply_local(others_applied_state, strategy_unitary(deviation), player - 1), player);
}

double expected_payoff(const GameSpec& spec, const StrategyProfile& profile, int player) {
  return MinorityGame(spec).payoff(profile, player);
}

}  // namespace qmg
