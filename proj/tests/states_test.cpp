#include "qmg/states.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qmg/analysis.hpp"
#include "qmg/game.hpp"

using namespace qmg;

namespace {

constexpr double kPi = std::numbers::pi;
const double kHalfRoot2 = 1 / std::sqrt(2.0);

std::vector<Complex> bell_product_oracle(int n) {
  oracle::Matrix pair(4, 1);
  pair.a = {0.0, kHalfRoot2, kHalfRoot2, 0.0};
  oracle::Matrix v = oracle::Matrix::identity(1);
  for (int k = 0; k < n / 2; ++k) v = oracle::kron(v, pair);
  return v.a;
}

void expect_amplitudes(const PureState& psi, const std::vector<Complex>& ref, double tol) {
  ASSERT_EQ(psi.dimension(), ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    EXPECT_NEAR(std::abs(psi[i] - ref[i]), 0.0, tol) << "index " << i;
  }
}

}  // namespace

TEST(Ghz, TwoAndSixQubits) {
  const PureState g2 = make_ghz(2);
  EXPECT_DOUBLE_EQ(g2[0].real(), kHalfRoot2);
  EXPECT_DOUBLE_EQ(g2[3].real(), kHalfRoot2);
  EXPECT_EQ(g2[1], Complex{});
  const PureState g6 = make_ghz(6);
  EXPECT_DOUBLE_EQ(g6[0].real(), kHalfRoot2);
  EXPECT_DOUBLE_EQ(g6[63].real(), kHalfRoot2);
  EXPECT_NEAR(std::abs(g6.inner(g6) - 1.0), 0.0, 1e-15);
  EXPECT_THROW(make_ghz(1), DomainError);
}

TEST(BellProduct, SmallCases) {
  const PureState b2 = make_bell_product(2);
  EXPECT_NEAR(b2[1].real(), kHalfRoot2, 1e-15);
  EXPECT_NEAR(b2[2].real(), kHalfRoot2, 1e-15);

  const PureState b4 = make_bell_product(4);
  for (BasisIndex i = 0; i < 16; ++i) {
    const bool expected = i == 5 || i == 6 || i == 9 || i == 10;
    EXPECT_NEAR(b4[i].real(), expected ? 0.5 : 0.0, 1e-15) << i;
  }
  EXPECT_THROW(make_bell_product(5), DomainError);
}

TEST(BellProduct, SixQubitsMatchesTensorExpansion) {
  const PureState b6 = make_bell_product(6);
  const auto ref = bell_product_oracle(6);
  expect_amplitudes(b6, ref, 1e-15);
  int nonzero = 0;
  for (BasisIndex i = 0; i < 64; ++i) {
    if (std::abs(b6[i]) > 0) {
      ++nonzero;
      EXPECT_NEAR(b6[i].real(), 1 / (2 * std::sqrt(2.0)), 1e-15);
    }
  }
  EXPECT_EQ(nonzero, 8);
}

TEST(GhzBellMixture, EndpointsRecoverGhzAndBell) {
  for (int n : {2, 4, 6}) {
    const PureState at_one = make_ghz_bell_mixture(n, 1.0);
    const PureState ghz = make_ghz(n);
    expect_amplitudes(at_one, {ghz.amplitudes().begin(), ghz.amplitudes().end()}, 1e-15);
    expect_amplitudes(make_ghz_bell_mixture(n, 0.0), bell_product_oracle(n), 1e-15);
  }
}

TEST(GhzBellMixture, InteriorPointFromExpansion) {
  // x = 1/sqrt2: GHZ coefficient x/sqrt2 = 1/2 on |0000> and |1111>, Bell
  // coefficient sqrt(1-x^2) = 1/sqrt2 times the 1/2 amplitudes of the
  // four-qubit Bell product.
  const double x = kHalfRoot2;
  std::vector<Complex> ref = bell_product_oracle(4);
  for (auto& z : ref) z *= std::sqrt(1 - x * x);
  ref[0] += x / std::sqrt(2.0);
  ref[15] += x / std::sqrt(2.0);
  const PureState psi = make_ghz_bell_mixture(4, x);
  expect_amplitudes(psi, ref, 1e-15);
  EXPECT_NEAR(psi[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(psi[5].real(), 1 / (2 * std::sqrt(2.0)), 1e-15);
}

TEST(GhzBellMixture, DomainErrors) {
  EXPECT_THROW(make_ghz_bell_mixture(4, 1.5), DomainError);
  EXPECT_THROW(make_ghz_bell_mixture(4, -0.1), DomainError);
  EXPECT_THROW(make_ghz_bell_mixture(3, 0.5), DomainError);
}

TEST(GhzBellMixture, ContinuousInX) {
  const MinorityGame base(GameSpec{4, InitialStateRecipe{StateFamily::GhzBellMixture, 4, 0.3}});
  const auto profile = StrategyProfile::symmetric(4, bell_region_strategy());
  for (double x = 0.0; x + 1e-4 <= 1.0; x += 0.05) {
    const PureState a = make_ghz_bell_mixture(4, x);
    const PureState b = make_ghz_bell_mixture(4, x + 1e-4);
    for (BasisIndex i = 0; i < 16; ++i) EXPECT_LT(std::abs(a[i] - b[i]), 1e-3);
    const MinorityGame ga(GameSpec{4, InitialStateRecipe{StateFamily::GhzBellMixture, 4, x}});
    const MinorityGame gb(GameSpec{4, InitialStateRecipe{StateFamily::GhzBellMixture, 4, x + 1e-4}});
    EXPECT_LT(std::abs(ga.payoff(profile, 1) - gb.payoff(profile, 1)), 1e-3);
  }
}

TEST(Noisy, LimitsAndSubstitution) {
  const PureState psi = make_ghz(2);
  const MixedState pure = make_noisy(psi, 1.0);
  const MixedState outer = MixedState::from_pure(psi);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_EQ(pure.data()[k], outer.data()[k]);

  const MixedState white = make_noisy(psi, 0.0);
  const MixedState mm = MixedState::maximally_mixed(2);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_EQ(white.data()[k], mm.data()[k]);

  const MixedState half = make_noisy(PureState(2), 0.5);
  EXPECT_DOUBLE_EQ(half(0, 0).real(), 0.625);
  for (BasisIndex i = 1; i < 4; ++i) EXPECT_DOUBLE_EQ(half(i, i).real(), 0.125);
  EXPECT_THROW(make_noisy(psi, 1.2), DomainError);
}

TEST(Noisy, DiagonalIsMixtureOfProbabilities) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState psi(3, oracle::random_state(rng, 3));
    const double f = std::uniform_real_distribution<double>(0, 1)(rng);
    const MixedState rho = make_noisy(psi, f);
    for (BasisIndex k = 0; k < 8; ++k) {
      EXPECT_NEAR(rho(k, k).real(), f * std::norm(psi[k]) + (1 - f) / 8, 1e-15);
    }
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
  }
}

TEST(Exponential, ClosedFormValues) {
  const PureState zero = make_exponential(4, 0.0);
  EXPECT_EQ(zero[0], Complex(1.0));
  for (BasisIndex i = 1; i < 16; ++i) EXPECT_EQ(zero[i], Complex{});

  const PureState max = make_exponential(4, kPi / 2);
  EXPECT_NEAR(std::abs(max[0] - kHalfRoot2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(max[15] - Complex(0, kHalfRoot2)), 0.0, 1e-15);

  const PureState third = make_exponential(3, kPi / 3);
  EXPECT_NEAR(std::abs(third[0] - std::sqrt(3.0) / 2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(third[7] - Complex(0, 0.5)), 0.0, 1e-15);

  EXPECT_THROW(make_exponential(4, 2.0), DomainError);
  EXPECT_THROW(make_exponential(4, -0.1), DomainError);
}

TEST(Exponential, MatchesMatrixExponential) {
  const auto sx = oracle::two_by_two(0, 1, 1, 0);
  for (int n = 2; n <= 4; ++n) {
    oracle::Matrix sxn = oracle::Matrix::identity(1);
    for (int q = 0; q < n; ++q) sxn = oracle::kron(sxn, sx);
    for (double gamma : {0.0, 0.3, kPi / 4, 1.2, kPi / 2}) {
      const oracle::Matrix J = oracle::expm_i(sxn, gamma / 2);
      std::vector<oracle::C> zero(std::size_t{1} << n);
      zero[0] = 1.0;
      expect_amplitudes(make_exponential(n, gamma), oracle::matvec(J, zero), 1e-10);
    }
  }
}

TEST(W3Product, ThreeAndSixQubits) {
  const PureState w3 = make_w3_product(3);
  for (BasisIndex i = 0; i < 8; ++i) {
    const bool on = i == 1 || i == 2 || i == 4;
    EXPECT_NEAR(w3[i].real(), on ? 1 / std::sqrt(3.0) : 0.0, 1e-15);
  }

  const PureState w6 = make_w3_product(6);
  int nonzero = 0;
  for (BasisIndex i = 0; i < 64; ++i) {
    if (std::abs(w6[i]) < 1e-15) continue;
    ++nonzero;
    EXPECT_NEAR(w6[i].real(), 1.0 / 3.0, 1e-15);
    EXPECT_EQ(std::popcount(i), 2);
    EXPECT_EQ(std::popcount(i >> 3), 1) << "one excitation per triple";
  }
  EXPECT_EQ(nonzero, 9);
  EXPECT_THROW(make_w3_product(4), DomainError);
}

TEST(BuildInitial, Dispatch) {
  const GameState ghz = build_initial({StateFamily::Ghz, 6});
  ASSERT_TRUE(std::holds_alternative<PureState>(ghz));
  const PureState ghz_ref = make_ghz(6);
  expect_amplitudes(std::get<PureState>(ghz), {ghz_ref.amplitudes().begin(), ghz_ref.amplitudes().end()}, 0.0);

  const GameState noisy = build_initial({StateFamily::GhzBellMixture, 6, 0.5, 0.8});
  ASSERT_TRUE(std::holds_alternative<MixedState>(noisy));
  const MixedState ref = make_noisy(make_ghz_bell_mixture(6, 0.5), 0.8);
  const auto& got = std::get<MixedState>(noisy);
  for (std::size_t k = 0; k < ref.data().size(); ++k) EXPECT_EQ(got.data()[k], ref.data()[k]);

  const GameState product = build_initial({StateFamily::ExponentialEntangler, 4, 1.0, 1.0, 0.0});
  EXPECT_EQ(std::get<PureState>(product)[0], Complex(1.0));
}

TEST(BuildInitial, RecipeValidation) {
  EXPECT_THROW(build_initial({StateFamily::BellProduct, 5}), DomainError);
  EXPECT_THROW(build_initial({StateFamily::W3Product, 4}), DomainError);
  EXPECT_THROW(build_initial({StateFamily::Ghz, 6, 1.5}), DomainError);
  EXPECT_THROW(build_initial({StateFamily::Ghz, 6, 1.0, 2.0}), DomainError);
  try {
    build_initial({StateFamily::Ghz, 6, 1.0, 1.0, 3.0});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.field(), "gamma");
  }
}

TEST(Constructors, RandomParametersGiveUnitNorm) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * (1 + trial % 5);
    EXPECT_NEAR(make_ghz_bell_mixture(n, unit(rng)).norm(), 1.0, 1e-12);
    EXPECT_NEAR(make_exponential(n, unit(rng) * kPi / 2).norm(), 1.0, 1e-12);
  }
  for (int n : {3, 6, 9, 12}) EXPECT_NEAR(make_w3_product(n).norm(), 1.0, 1e-12);
}

TEST(StateFamily, NamesRoundTrip) {
  for (auto f : {StateFamily::Ghz, StateFamily::BellProduct, StateFamily::GhzBellMixture,
                 StateFamily::ExponentialEntangler, StateFamily::W3Product}) {
    EXPECT_EQ(parse_state_family(to_string(f)), f);
  }
  EXPECT_THROW(parse_state_family("cat"), DomainError);
}
