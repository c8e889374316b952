#include "qmg/config.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace qmg;

namespace {

constexpr double kPi = std::numbers::pi;

RunConfig parse(std::vector<std::string> args, std::optional<std::string_view> text = std::nullopt) {
  return parse_config(args, text);
}

std::string field_of(std::vector<std::string> args) {
  try {
    parse(std::move(args));
  } catch (const DomainError& e) {
    return e.field();
  }
  return {};
}

}  // namespace

TEST(ParseAngle, Forms) {
  EXPECT_DOUBLE_EQ(parse_angle("pi", "a"), kPi);
  EXPECT_DOUBLE_EQ(parse_angle("-pi/8", "a"), -kPi / 8);
  EXPECT_DOUBLE_EQ(parse_angle("3pi/4", "a"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("3*pi/4", "a"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(parse_angle("0.25", "a"), 0.25);
  EXPECT_DOUBLE_EQ(parse_angle("-1e-3", "a"), -1e-3);
  EXPECT_THROW(parse_angle("tau", "a"), DomainError);
  EXPECT_THROW(parse_angle("1.0x", "a"), DomainError);
}

TEST(ParseStrategy, Triple) {
  const auto s = parse_strategy("pi/2,-pi/12,pi/12", "symmetric");
  EXPECT_DOUBLE_EQ(s.theta, kPi / 2);
  EXPECT_DOUBLE_EQ(s.alpha, -kPi / 12);
  EXPECT_DOUBLE_EQ(s.beta, kPi / 12);
  EXPECT_THROW(parse_strategy("1,2", "symmetric"), DomainError);
}

TEST(ParseConfig, Defaults) {
  const RunConfig c = parse({"payoff"});
  EXPECT_EQ(c.command, Command::Payoff);
  EXPECT_EQ(c.n, 6);
  EXPECT_EQ(c.state, StateFamily::Ghz);
  EXPECT_TRUE(c.strategies.empty());
  EXPECT_EQ(c.output_format, OutputFormat::Csv);
}

TEST(ParseConfig, Flags) {
  const RunConfig c = parse({"sweep-x", "--n", "4", "--state", "mixture", "--f", "0.5", "--symmetric", "pi/4,0,0",
                             "--steps", "7", "--out", "o.json", "--format", "json", "--gamma", "pi/3"});
  EXPECT_EQ(c.command, Command::SweepX);
  EXPECT_EQ(c.n, 4);
  EXPECT_EQ(c.state, StateFamily::GhzBellMixture);
  EXPECT_EQ(c.f, 0.5);
  ASSERT_EQ(c.strategies.size(), 1U);
  EXPECT_DOUBLE_EQ(c.strategies[0].theta, kPi / 4);
  EXPECT_EQ(c.steps, 7);
  EXPECT_EQ(c.output_path, "o.json");
  EXPECT_EQ(c.output_format, OutputFormat::Json);
  EXPECT_DOUBLE_EQ(c.gamma, kPi / 3);
}

TEST(ParseConfig, Profile) {
  const RunConfig c = parse({"payoff", "--n", "2", "--state", "ghz", "--profile", "0,0,0;pi,0,0"});
  ASSERT_EQ(c.strategies.size(), 2U);
  EXPECT_DOUBLE_EQ(c.profile().player(2).theta, kPi);
  EXPECT_EQ(field_of({"payoff", "--n", "4", "--profile", "0,0,0;pi,0,0"}), "profile");
  EXPECT_NE(field_of({"payoff", "--symmetric", "0,0,0", "--profile", "0,0,0;0,0,0"}), "");
}

TEST(ParseConfig, ErrorsNameTheField) {
  EXPECT_EQ(field_of({"payoff", "--x", "1.5"}), "x");
  EXPECT_EQ(field_of({"payoff", "--f", "-0.1"}), "f");
  EXPECT_EQ(field_of({"payoff", "--gamma", "2"}), "gamma");
  EXPECT_EQ(field_of({"payoff", "--n", "1"}), "n");
  EXPECT_EQ(field_of({"payoff", "--state", "bell", "--n", "5"}), "n");
  EXPECT_EQ(field_of({"payoff", "--symmetric", "4,0,0"}), "symmetric");
  EXPECT_EQ(field_of({"payoff", "--player", "7"}), "player");
  EXPECT_EQ(field_of({"payoff", "--format", "xml"}), "format");
  EXPECT_NE(field_of({"frobnicate"}), "");
  EXPECT_NE(field_of({"payoff", "--bogus", "1"}), "");
  EXPECT_NE(field_of({"payoff", "--n", "six"}), "");
}

TEST(ParseConfig, ConfigFileWithFlagOverride) {
  const std::string text =
      "# six-player mixture\n"
      "command = sweep-f\n"
      "state = mixture\n"
      "x = 0.4\n"
      "steps = 5\n";
  const RunConfig from_file = parse({}, text);
  EXPECT_EQ(from_file.command, Command::SweepF);
  EXPECT_EQ(from_file.x, 0.4);
  EXPECT_EQ(from_file.steps, 5);

  const RunConfig overridden = parse({"--x", "0.9"}, text);
  EXPECT_EQ(overridden.x, 0.9);
  EXPECT_EQ(overridden.steps, 5);

  EXPECT_THROW(parse({}, "nonsense = 3\n"), DomainError);
}

TEST(RenderConfig, RoundTrips) {
  std::mt19937_64 rng(50);
  std::uniform_real_distribution<double> unit(0, 1);
  const std::vector<Command> commands{Command::Payoff, Command::Surface, Command::NashCheck, Command::SweepGamma};
  for (int trial = 0; trial < 200; ++trial) {
    RunConfig c;
    c.command = commands[trial % commands.size()];
    c.n = 4 + 2 * (trial % 2);
    c.state = trial % 3 ? StateFamily::GhzBellMixture : StateFamily::ExponentialEntangler;
    c.x = unit(rng);
    c.f = unit(rng);
    c.gamma = unit(rng) * kPi / 2;
    if (trial % 4 == 1) c.strategies = {{unit(rng) * kPi, unit(rng) - 0.5, unit(rng) - 0.5}};
    if (trial % 4 == 2) c.strategies.assign(static_cast<std::size_t>(c.n), {unit(rng) * kPi, 0.1, -0.2});
    c.player = 1 + trial % c.n;
    c.grid = 5 + trial % 7;
    c.steps = 2 + trial % 9;
    c.tolerance = unit(rng) * 1e-3;
    if (trial % 5 == 0) c.classical_payoff = unit(rng);
    if (trial % 7 == 0) c.quantum_payoff = unit(rng);
    if (trial % 2) c.output_path = "out/file " + std::to_string(trial) + ".csv";
    c.output_format = trial % 2 ? OutputFormat::Json : OutputFormat::Csv;
    const RunConfig back = parse({}, render_config(c));
    EXPECT_EQ(back, c) << render_config(c);
  }
}
