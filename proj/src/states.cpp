#include "qmg/states.hpp"

#include <cmath>
#include <fmt/format.h>

namespace qmg {

namespace {

constexpr double kPi = std::numbers::pi;

void require_unit_interval(std::string_view field, double value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError(std::string(field), fmt::format("must be in [0, 1], got {}", value));
  }
}

void require_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= kPi / 2)) {
    throw DomainError("gamma", fmt::format("must be in [0, pi/2], got {}", gamma));
  }
}

void require_even(int n) {
  if (n < 2 || n % 2 != 0) throw DomainError("n", fmt::format("must be even and >= 2, got {}", n));
}

// Dense tensor power of a small factor state.
std::vector<Complex> tensor_power(std::span<const Complex> factor, int factor_qubits, int copies) {
  std::vector<Complex> out{1.0};
  for (int c = 0; c < copies; ++c) {
    std::vector<Complex> next(out.size() * factor.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] == Complex{}) continue;
      for (std::size_t j = 0; j < factor.size(); ++j) {
        next[(i << factor_qubits) | j] = out[i] * factor[j];
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::string_view to_string(StateFamily family) {
  switch (family) {
    case StateFamily::Ghz: return "ghz";
    case StateFamily::BellProduct: return "bell";
    case StateFamily::GhzBellMixture: return "mixture";
    case StateFamily::ExponentialEntangler: return "exponential";
    case StateFamily::W3Product: return "w3";
  }
  return "?";
}

StateFamily parse_state_family(std::string_view name) {
  for (StateFamily f : {StateFamily::Ghz, StateFamily::BellProduct, StateFamily::GhzBellMixture,
                        StateFamily::ExponentialEntangler, StateFamily::W3Product}) {
    if (name == to_string(f)) return f;
  }
  throw DomainError("state", fmt::format("unknown state family '{}' (expected ghz, bell, mixture, exponential, w3)", name));
}

void InitialStateRecipe::validate() const {
  if (n_qubits < 2 || n_qubits > kMaxQubits) {
    throw DomainError("n", fmt::format("must be in [2, {}], got {}", kMaxQubits, n_qubits));
  }
  require_unit_interval("x", x);
  require_unit_interval("f", f);
  require_gamma(gamma);
  if ((family == StateFamily::BellProduct || family == StateFamily::GhzBellMixture) && n_qubits % 2 != 0) {
    throw DomainError("n", fmt::format("{} state needs an even qubit count, got {}", to_string(family), n_qubits));
  }
  if (family == StateFamily::W3Product && n_qubits % 3 != 0) {
    throw DomainError("n", fmt::format("w3 state needs a qubit count divisible by 3, got {}", n_qubits));
  }
}

PureState make_ghz(int n) {
  if (n < 2) throw DomainError("n", fmt::format("GHZ state needs n >= 2, got {}", n));
  check_qubit_count(n);
  std::vector<Complex> amps(std::size_t{1} << n);
  amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
  return PureState(n, std::move(amps));
}

PureState make_bell_product(int n) {
  require_even(n);
  check_qubit_count(n);
  const double h = 1.0 / std::sqrt(2.0);
  const std::array<Complex, 4> pair{0.0, h, h, 0.0};
  return PureState(n, tensor_power(pair, 2, n / 2), true);
}

PureState make_ghz_bell_mixture(int n, double x) {
  require_even(n);
  require_unit_interval("x", x);
  check_qubit_count(n);
  const PureState bell = make_bell_product(n);
  const double bell_weight = std::sqrt(1.0 - x * x);
  std::vector<Complex> amps(bell.dimension());
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = bell_weight * bell[i];
  amps.front() += x / std::sqrt(2.0);
  amps.back() += x / std::sqrt(2.0);
  return PureState(n, std::move(amps), true);
}

MixedState make_noisy(const PureState& state, double f) {
  require_unit_interval("f", f);
  const std::size_t dim = state.dimension();
  const auto a = state.amplitudes();
  const double floor = (1.0 - f) / static_cast<double>(dim);
  std::vector<Complex> rho(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) rho[r * dim + c] = f * a[r] * std::conj(a[c]);
    rho[r * dim + r] += floor;
  }
  return MixedState(state.n_qubits(), std::move(rho));
}

PureState make_exponential(int n, double gamma) {
  require_gamma(gamma);
  if (n < 2) throw DomainError("n", fmt::format("entangled state needs n >= 2, got {}", n));
  check_qubit_count(n);
  std::vector<Complex> amps(std::size_t{1} << n);
  amps.front() = std::cos(gamma / 2);
  amps.back() = Complex{0.0, std::sin(gamma / 2)};
  return PureState(n, std::move(amps), true);
}

PureState make_w3_product(int n) {
  if (n < 3 || n % 3 != 0) throw DomainError("n", fmt::format("must be a positive multiple of 3, got {}", n));
  check_qubit_count(n);
  const double t = 1.0 / std::sqrt(3.0);
  const std::array<Complex, 8> w3{0.0, t, t, 0.0, t, 0.0, 0.0, 0.0};
  return PureState(n, tensor_power(w3, 3, n / 3), true);
}

PureState build_pure_part(const InitialStateRecipe& recipe) {
  recipe.validate();
  switch (recipe.family) {
    case StateFamily::Ghz: return make_ghz(recipe.n_qubits);
    case StateFamily::BellProduct: return make_bell_product(recipe.n_qubits);
    case StateFamily::GhzBellMixture: return make_ghz_bell_mixture(recipe.n_qubits, recipe.x);
    case StateFamily::ExponentialEntangler: return make_exponential(recipe.n_qubits, recipe.gamma);
    case StateFamily::W3Product: return make_w3_product(recipe.n_qubits);
  }
  throw std::logic_error("unhandled state family");
}

GameState build_initial(const InitialStateRecipe& recipe) {
  PureState pure = build_pure_part(recipe);
  if (recipe.f == 1.0) return pure;
  return make_noisy(pure, recipe.f);
}

}  // namespace qmg
