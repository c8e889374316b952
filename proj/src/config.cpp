#include "qmg/config.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>
#include <fmt/format.h>

#include "qmg/analysis.hpp"

namespace qmg {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<std::pair<Command, std::string_view>, 9> kCommands{{
    {Command::Payoff, "payoff"},
    {Command::Surface, "surface"},
    {Command::BestResponse, "best-response"},
    {Command::NashCheck, "nash-check"},
    {Command::SweepX, "sweep-x"},
    {Command::SweepF, "sweep-f"},
    {Command::SweepGamma, "sweep-gamma"},
    {Command::Classical, "classical"},
    {Command::Conjecture, "conjecture"},
}};

constexpr std::array<std::string_view, 19> kKeys{
    "command", "n",         "state", "x",        "f",        "gamma",    "symmetric",
    "profile", "player",    "grid",  "theta-steps", "alpha-steps", "steps", "tolerance",
    "c-payoff", "q-payoff", "out",   "format",   "config"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_decimal(std::string_view token, std::string_view field) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError(std::string(field), fmt::format("malformed number '{}'", token));
  }
  return value;
}

std::string render_double(double v) { return fmt::format("{:.17g}", v); }

std::string render_strategy(const StrategyParams& s) {
  return fmt::format("{},{},{}", render_double(s.theta), render_double(s.alpha), render_double(s.beta));
}

struct ConfigEntry {
  std::string key;
  std::string value;
};

std::vector<ConfigEntry> parse_config_text(std::string_view text) {
  std::vector<ConfigEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config", fmt::format("line {}: expected 'key = value'", line_no));
    }
    std::string key(trim(body.substr(0, eq)));
    std::string value(trim(body.substr(eq + 1)));
    if (std::ranges::find(kKeys, key) == kKeys.end() || key == "config") {
      throw DomainError(key, fmt::format("config line {}: unknown key '{}'", line_no, key));
    }
    entries.push_back({std::move(key), std::move(value)});
  }
  return entries;
}

std::optional<std::string> read_config_path(std::span<const std::string> args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw DomainError("config", "missing path after --config");
      return args[i + 1];
    }
    if (args[i].starts_with("--config=")) return args[i].substr(9);
  }
  return std::nullopt;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("config", fmt::format("cannot read config file '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void require(bool ok, const char* field, const std::string& message) {
  if (!ok) throw DomainError(field, message);
}

void validate(const RunConfig& c) {
  require(c.n >= 2 && c.n <= kMaxQubits, "n", fmt::format("must be in [2, {}], got {}", kMaxQubits, c.n));
  c.recipe().validate();
  if (c.strategies.size() > 1) {
    require(static_cast<int>(c.strategies.size()) == c.n, "profile",
            fmt::format("has {} strategies for {} players", c.strategies.size(), c.n));
  }
  for (const auto& s : c.strategies) s.validate();
  require(c.player >= 1 && c.player <= c.n, "player", fmt::format("must be in [1, {}], got {}", c.n, c.player));
  require(c.grid >= 2, "grid", fmt::format("must be >= 2, got {}", c.grid));
  require(c.theta_steps >= 2, "theta-steps", fmt::format("must be >= 2, got {}", c.theta_steps));
  require(c.alpha_steps >= 2, "alpha-steps", fmt::format("must be >= 2, got {}", c.alpha_steps));
  require(c.steps >= 2, "steps", fmt::format("must be >= 2, got {}", c.steps));
  require(c.tolerance >= 0.0, "tolerance", fmt::format("must be >= 0, got {}", c.tolerance));
  if (c.classical_payoff) {
    require(*c.classical_payoff >= 0.0 && *c.classical_payoff <= 1.0, "c-payoff",
            fmt::format("must be in [0, 1], got {}", *c.classical_payoff));
  }
  if (c.quantum_payoff) {
    require(*c.quantum_payoff >= 0.0 && *c.quantum_payoff <= 1.0, "q-payoff",
            fmt::format("must be in [0, 1], got {}", *c.quantum_payoff));
  }
}

}  // namespace

std::string_view to_string(Command command) {
  for (const auto& [c, name] : kCommands) {
    if (c == command) return name;
  }
  return "?";
}

Command parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands) {
    if (n == name) return c;
  }
  throw DomainError("command", fmt::format("unknown command '{}'", name));
}

StrategyProfile RunConfig::profile() const {
  if (strategies.empty()) return StrategyProfile::symmetric(n, default_equilibrium_strategy(state, n));
  if (strategies.size() == 1) return StrategyProfile::symmetric(n, strategies.front());
  return StrategyProfile(strategies);
}

double parse_angle(std::string_view token, std::string_view field) {
  const std::string t(trim(token));
  static const std::regex pi_form(R"(^([+-])?(?:(\d+(?:\.\d*)?)\*?)?pi(?:/(\d+(?:\.\d*)?))?$)");
  std::smatch m;
  if (std::regex_match(t, m, pi_form)) {
    double value = kPi;
    if (m[2].matched) value *= parse_decimal(m[2].str(), field);
    if (m[3].matched) {
      const double d = parse_decimal(m[3].str(), field);
      if (d == 0.0) throw DomainError(std::string(field), fmt::format("division by zero in angle '{}'", t));
      value /= d;
    }
    return m[1].matched && m[1].str() == "-" ? -value : value;
  }
  if (t.empty()) throw DomainError(std::string(field), "empty angle");
  std::string_view number = t;
  if (number.front() == '+') number.remove_prefix(1);
  try {
    return parse_decimal(number, field);
  } catch (const DomainError&) {
    throw DomainError(std::string(field), fmt::format("malformed angle '{}'", t));
  }
}

StrategyParams parse_strategy(std::string_view token, std::string_view field) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = token.find(',', start);
    parts.push_back(token.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw DomainError(std::string(field), fmt::format("expected 'theta,alpha,beta', got '{}'", token));
  }
  StrategyParams p{parse_angle(parts[0], field), parse_angle(parts[1], field), parse_angle(parts[2], field)};
  try {
    p.validate();
  } catch (const DomainError& e) {
    throw DomainError(std::string(field), e.what());
  }
  return p;
}

RunConfig parse_config(std::span<const std::string> args, std::optional<std::string_view> config_text) {
  std::string file_text;
  if (!config_text) {
    if (auto path = read_config_path(args)) {
      file_text = slurp(*path);
      config_text = file_text;
    }
  }

  const bool command_in_args = !args.empty() && !args.front().starts_with("-");
  std::vector<std::string> tokens;
  if (command_in_args) tokens.push_back(args.front());
  if (config_text) {
    for (const auto& entry : parse_config_text(*config_text)) {
      if (entry.key == "command") {
        if (!command_in_args) tokens.insert(tokens.begin(), entry.value);
        continue;
      }
      tokens.push_back("--" + entry.key);
      tokens.push_back(entry.value);
    }
  }
  tokens.insert(tokens.end(), args.begin() + (command_in_args ? 1 : 0), args.end());
  if (tokens.empty() || tokens.front().starts_with("-")) throw DomainError("command", "no command given");

  RunConfig config;
  std::string command, state = "ghz", symmetric, profile, format = "csv", config_path;
  std::optional<double> c_payoff, q_payoff;

  CLI::App app{"qmg"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("command", command)->required();
  app.add_option("--n", config.n);
  app.add_option("--state", state);
  app.add_option("--x", config.x);
  app.add_option("--f", config.f);
  std::string gamma_text;
  app.add_option("--gamma", gamma_text, "radians or a pi fraction");
  app.add_option("--symmetric", symmetric);
  app.add_option("--profile", profile);
  app.add_option("--player", config.player);
  app.add_option("--grid", config.grid);
  app.add_option("--theta-steps", config.theta_steps);
  app.add_option("--alpha-steps", config.alpha_steps);
  app.add_option("--steps", config.steps);
  app.add_option("--tolerance", config.tolerance);
  app.add_option("--c-payoff", c_payoff);
  app.add_option("--q-payoff", q_payoff);
  app.add_option("--out", config.output_path);
  app.add_option("--format", format);
  app.add_option("--config", config_path);

  std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    throw DomainError("arguments", what);
  }

  config.command = parse_command(command);
  config.state = parse_state_family(state);
  config.output_format = parse_output_format(format);
  if (!gamma_text.empty()) config.gamma = parse_angle(gamma_text, "gamma");
  config.classical_payoff = c_payoff;
  config.quantum_payoff = q_payoff;
  if (!symmetric.empty() && !profile.empty()) {
    throw DomainError("profile", "give either --symmetric or --profile, not both");
  }
  if (!symmetric.empty()) config.strategies = {parse_strategy(symmetric, "symmetric")};
  if (!profile.empty()) {
    std::string_view rest = profile;
    while (!rest.empty()) {
      const auto semi = rest.find(';');
      config.strategies.push_back(parse_strategy(trim(rest.substr(0, semi)), "profile"));
      if (semi == std::string_view::npos) break;
      rest.remove_prefix(semi + 1);
    }
    if (config.strategies.size() < 2) throw DomainError("profile", "needs one strategy per player; use --symmetric for a shared one");
  }
  validate(config);
  return config;
}

std::string render_config(const RunConfig& c) {
  std::string out;
  const auto line = [&](std::string_view key, const std::string& value) { out += fmt::format("{} = {}\n", key, value); };
  line("command", std::string(to_string(c.command)));
  line("n", std::to_string(c.n));
  line("state", std::string(to_string(c.state)));
  line("x", render_double(c.x));
  line("f", render_double(c.f));
  line("gamma", render_double(c.gamma));
  if (c.strategies.size() == 1) {
    line("symmetric", render_strategy(c.strategies.front()));
  } else if (!c.strategies.empty()) {
    std::string joined;
    for (std::size_t i = 0; i < c.strategies.size(); ++i) {
      if (i) joined += ';';
      joined += render_strategy(c.strategies[i]);
    }
    line("profile", joined);
  }
  line("player", std::to_string(c.player));
  line("grid", std::to_string(c.grid));
  line("theta-steps", std::to_string(c.theta_steps));
  line("alpha-steps", std::to_string(c.alpha_steps));
  line("steps", std::to_string(c.steps));
  line("tolerance", render_double(c.tolerance));
  if (c.classical_payoff) line("c-payoff", render_double(*c.classical_payoff));
  if (c.quantum_payoff) line("q-payoff", render_double(*c.quantum_payoff));
  if (!c.output_path.empty()) line("out", c.output_path);
  line("format", std::string(to_string(c.output_format)));
  return out;
}

}  // namespace qmg
