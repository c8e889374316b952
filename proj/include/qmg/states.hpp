// Initial-state families for minority games.

#pragma once

#include <numbers>
#include <string>
#include <string_view>
#include <variant>

#include "qmg/core.hpp"

namespace qmg {

enum class StateFamily { Ghz, BellProduct, GhzBellMixture, ExponentialEntangler, W3Product };

std::string_view to_string(StateFamily family);
/// Accepts the short CLI names: ghz, bell, mixture, exponential, w3.
StateFamily parse_state_family(std::string_view name);

/// Parameters not used by a family are still range-checked but otherwise
/// ignored. `f < 1` adds white noise on top of any family.
struct InitialStateRecipe {
  StateFamily family = StateFamily::Ghz;
  int n_qubits = 6;
  double x = 1.0;
  double f = 1.0;
  double gamma = std::numbers::pi / 2;

  /// Throws DomainError naming the first violated field.
  void validate() const;
  bool operator==(const InitialStateRecipe&) const = default;
};

using GameState = std::variant<PureState, MixedState>;

/// (|0...0> + |1...1>)/sqrt2.
PureState make_ghz(int n);

/// ((|01> + |10>)/sqrt2)^{x n/2}.
PureState make_bell_product(int n);

/// x/sqrt2 (|0...0> + |1...1>) + sqrt((1-x^2)/2^{n/2}) (|01>+|10>)^{x n/2},
/// renormalized. The two terms have disjoint support, so the norm is already
/// 1 for every x in [0,1].
PureState make_ghz_bell_mixture(int n, double x);

/// f |psi><psi| + (1-f)/2^n I.
MixedState make_noisy(const PureState& state, double f);

/// cos(gamma/2)|0...0> + i sin(gamma/2)|1...1>, which is
/// exp(i gamma/2 sigma_x^{x n})|0...0> since that operator squares to I.
PureState make_exponential(int n, double gamma);

/// |W3>^{x n/3} with |W3> = (|001> + |010> + |100>)/sqrt3.
PureState make_w3_product(int n);

/// Noise-free part of the recipe (f ignored).
PureState build_pure_part(const InitialStateRecipe& recipe);

/// Pure state when f == 1, density matrix otherwise.
GameState build_initial(const InitialStateRecipe& recipe);

}  // namespace qmg
