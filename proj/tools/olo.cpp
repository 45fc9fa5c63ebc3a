// Command line front end.
//
//   olo value   game values across a horizon range
//   olo play    run a full game and write the transcript
//   olo verify  check closed forms against the slow oracles
//   olo bet     run a budgeted betting session
//
// Exit codes: 0 success, 1 usage or argument errors, 2 verification
// failures, 3 I/O failures.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <olo/olo.hpp>

namespace {

using namespace olo;

GameKind parse_kind(const std::string& s) {
  if (s == "quad") return GameKind::quadratic;
  if (s == "abs") return GameKind::absolute_value;
  if (s == "exp") return GameKind::exp_one_sided;
  if (s == "symexp") return GameKind::exp_symmetric;
  throw std::invalid_argument("unknown kind: " + s);
}

StrategyKind parse_strategy(const std::string& s, GameKind kind) {
  if (s == "auto") {
    switch (kind) {
      case GameKind::quadratic: return StrategyKind::gradient_descent;
      case GameKind::absolute_value: return StrategyKind::hypercube;
      case GameKind::exp_one_sided: return StrategyKind::betting;
      case GameKind::exp_symmetric: return StrategyKind::symmetric_betting;
    }
  }
  if (s == "gd") return StrategyKind::gradient_descent;
  if (s == "hypercube") return StrategyKind::hypercube;
  if (s == "betting") return StrategyKind::betting;
  if (s == "symmetric") return StrategyKind::symmetric_betting;
  if (s == "generic") return StrategyKind::generic;
  throw std::invalid_argument("unknown strategy: " + s);
}

AdversaryKind parse_adversary(const std::string& s) {
  if (s == "random") return AdversaryKind::rademacher_random;
  if (s == "greedy") return AdversaryKind::greedy;
  if (s == "biased") return AdversaryKind::biased_coin;
  if (s == "replay") return AdversaryKind::replay;
  if (s == "minimax") return AdversaryKind::minimax;
  throw std::invalid_argument("unknown adversary: " + s);
}

struct HorizonRange {
  int lo = 1;
  int hi = 1;
  int step = 1;
};

// "N" or "lo..hi:step" (":step" optional, default 1)
HorizonRange parse_horizon_range(const std::string& text) {
  const auto to_int = [&](const std::string& part) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad horizon range: " + text);
    }
    if (used != part.size()) throw std::invalid_argument("bad horizon range: " + text);
    return value;
  };

  HorizonRange r;
  const size_t dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(text);
    return r;
  }
  r.lo = to_int(text.substr(0, dots));
  std::string rest = text.substr(dots + 2);
  const size_t colon = rest.find(':');
  if (colon != std::string::npos) {
    r.step = to_int(rest.substr(colon + 1));
    rest = rest.substr(0, colon);
  }
  r.hi = to_int(rest);
  if (r.lo < 1 || r.hi < r.lo || r.step < 1) {
    throw std::invalid_argument("bad horizon range: " + text);
  }
  return r;
}

std::string trimmed(const std::string& s) {
  const size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Flat key=value config support. If --config FILE appears anywhere, read the
// file (blank lines and '#' comments skipped, later keys override earlier
// ones) and append --key=value tokens for every option the command line did
// not set itself, so explicit flags always win.
std::vector<std::string> with_config_applied(std::vector<std::string> args) {
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::map<std::string, std::string> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trimmed(line);
    if (line.empty() || line[0] == '#') continue;
    size_t split = line.find('=');
    if (split == std::string::npos) split = line.find(' ');
    const std::string key = split == std::string::npos ? "" : trimmed(line.substr(0, split));
    if (key.empty()) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key=value");
    }
    pairs[key] = trimmed(line.substr(split + 1));
  }

  std::vector<std::string> given;
  for (const std::string& a : args) {
    if (a.rfind("--", 0) == 0) given.push_back(a.substr(0, a.find('=')));
  }
  for (const auto& [key, value] : pairs) {
    const std::string flag = "--" + key;
    if (std::find(given.begin(), given.end(), flag) == given.end()) {
      args.push_back(flag + "=" + value);
    }
  }
  return args;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(payload.c_str(), stdout);
  } else {
    write_text_file(out_path, payload);
  }
}

void print_kv(const char* key, double value) {
  std::printf("%s %s\n", key, format_double(value).c_str());
}

struct ValueArgs {
  std::string kind;
  std::string horizons;
  double sigma = 1.0;
  double alpha = 0.5;
  std::string format = "csv";
  std::string out_path;
};

int run_value(const ValueArgs& a) {
  const GameKind kind = parse_kind(a.kind);
  const HorizonRange r = parse_horizon_range(a.horizons);
  const std::vector<ValueRow> rows = value_sweep(kind, r.lo, r.hi, r.step, a.sigma, a.alpha);
  emit(a.format == "json" ? to_json(rows) : to_csv(rows), a.out_path);
  return 0;
}

struct PlayArgs {
  std::string kind;
  int horizon = 1;
  double sigma = 1.0;
  double alpha = 0.5;
  int dimension = 1;
  std::string strategy = "auto";
  std::string adversary = "random";
  double bias = 0.5;
  std::string gradients_path;
  uint64_t seed = kDefaultSeed;
  std::string format = "csv";
  std::string out_path;
};

int run_play(const PlayArgs& a) {
  GameSpec spec;
  spec.benchmark = make_benchmark(parse_kind(a.kind), a.horizon, a.sigma, a.alpha);
  spec.dimension = a.dimension;
  spec.strategy = parse_strategy(a.strategy, spec.benchmark.kind);
  spec.adversary.kind = parse_adversary(a.adversary);
  spec.adversary.bias = a.bias;
  spec.seed = a.seed;
  if (spec.adversary.kind == AdversaryKind::replay) {
    if (a.gradients_path.empty()) {
      throw std::invalid_argument("replay adversary needs --gradients FILE");
    }
    spec.adversary.replay = load_gradient_file(a.gradients_path);
  }

  const Transcript tr = play_game(spec);
  std::printf("kind %s\n", to_string(spec.benchmark.kind));
  std::printf("horizon %d\n", spec.benchmark.horizon);
  std::printf("dimension %d\n", spec.dimension);
  std::printf("strategy %s\n", to_string(spec.strategy));
  std::printf("adversary %s\n", to_string(spec.adversary.kind));
  std::printf("seed %llu\n", (unsigned long long)spec.seed);
  print_kv("loss", tr.loss);
  print_kv("reward", tr.reward);
  print_kv("benchmark_value", tr.benchmark_value);
  print_kv("regret", tr.regret);
  print_kv("game_value",
           spec.dimension * game_value(spec.benchmark).exact_value);
  if (!a.out_path.empty()) {
    write_text_file(a.out_path, a.format == "json" ? to_json(tr) : to_csv(tr));
  }
  return 0;
}

struct BetArgs {
  int horizon = 1;
  double alpha = 0.5;
  double budget = 1.0;
  std::string adversary = "random";
  double bias = 0.5;
  std::string gradients_path;
  uint64_t seed = kDefaultSeed;
  std::string format = "csv";
  std::string out_path;
};

int run_bet(const BetArgs& a) {
  AdversaryConfig cfg;
  cfg.kind = parse_adversary(a.adversary);
  cfg.bias = a.bias;
  if (cfg.kind == AdversaryKind::replay) {
    if (a.gradients_path.empty()) {
      throw std::invalid_argument("replay adversary needs --gradients FILE");
    }
    cfg.replay = load_gradient_file(a.gradients_path);
  }
  const Benchmark implied = Benchmark::exp_symmetric(a.alpha, a.horizon);
  const BettingSession session =
      betting_session(a.horizon, a.alpha, a.budget, make_adversary(cfg, implied, a.seed));

  const double floor = a.budget *
                       std::exp(std::fabs(session.gradient_sum) / implied.exp_scale()) /
                       symmetric_worst_case_loss();
  std::printf("horizon %d\n", session.horizon);
  print_kv("alpha", session.alpha);
  print_kv("budget", session.budget);
  print_kv("final_wealth", session.final_wealth);
  print_kv("min_wealth", session.min_wealth);
  print_kv("gradient_sum", session.gradient_sum);
  print_kv("wealth_floor", floor);
  std::printf("bets_exceeding_wealth %d\n", session.bets_exceeding_wealth);
  std::printf("went_negative %d\n", session.went_negative ? 1 : 0);
  if (!a.out_path.empty()) {
    write_text_file(a.out_path, a.format == "json" ? to_json(session) : to_csv(session));
  }
  return 0;
}

struct VerifyArgs {
  int max_horizon = 10;
  bool grid = false;
};

struct VerifyReport {
  bool all_ok = true;

  void line(bool ok, const char* check, const std::string& label, int T, double expected,
            double got, double tol) {
    std::printf("%s %s kind=%s T=%d expected=%.12g got=%.12g tol=%g\n",
                ok ? "PASS" : "FAIL", check, label.c_str(), T, expected, got, tol);
    if (!ok) all_ok = false;
  }
};

int run_verify(const VerifyArgs& a) {
  if (a.max_horizon < 0 || a.max_horizon > kMaxExhaustiveHorizon) {
    throw std::invalid_argument("verify: --max-t must lie in [0, 16]");
  }

  struct Config {
    std::string label;
    Benchmark (*make)(int);
  };
  const Config configs[] = {
      {"quad", [](int T) { return Benchmark::quadratic(1.0, T); }},
      {"quad_sigma_half", [](int T) { return Benchmark::quadratic(0.5, T); }},
      {"abs", [](int T) { return Benchmark::absolute_value(T); }},
      {"exp", [](int T) { return Benchmark::exp_one_sided(0.5, T); }},
      {"symexp", [](int T) { return Benchmark::exp_symmetric(0.5, T); }},
  };

  VerifyReport report;
  for (const Config& cfg : configs) {
    // closed-form value against the exhaustive average
    for (int T = 1; T <= std::min(a.max_horizon, 14); ++T) {
      const Benchmark b = cfg.make(T);
      const double expected = game_value(b).exact_value;
      const double got = exhaustive_value(b);
      const bool ok = std::fabs(got - expected) <= 1e-10 * std::max(1.0, std::fabs(expected));
      report.line(ok, "value_exhaustive", cfg.label, T, expected, got, 1e-10);
    }

    // closed-form plays against the generic recipe, every reachable state
    for (int T = 1; T <= std::min(a.max_horizon, 12); ++T) {
      const Benchmark b = cfg.make(T);
      const StrategyFn closed = minimax_strategy(b);
      const StrategyFn generic = make_strategy(StrategyKind::generic, b);
      double worst = 0.0;
      for (int t = 0; t < T; ++t) {
        for (int k = 0; k <= t; ++k) {
          const PlayerState s{T, t, (double)(2 * k - t)};
          worst = std::max(worst, std::fabs(closed(s) - generic(s)));
        }
      }
      report.line(worst <= 1e-9, "play_recipe", cfg.label, T, 0.0, worst, 1e-9);
    }

    // worst-case regret of the closed-form strategy equals the value
    for (int T = 1; T <= std::min(a.max_horizon, 12); ++T) {
      const Benchmark b = cfg.make(T);
      const double expected = game_value(b).exact_value;
      const double got = worst_case_regret(minimax_strategy(b), b).regret;
      const bool ok = std::fabs(got - expected) <= 1e-9 * std::max(1.0, std::fabs(expected));
      report.line(ok, "worst_case_regret", cfg.label, T, expected, got, 1e-9);
    }

    // one-step halving recursion across all reachable states
    for (int T = 1; T <= a.max_horizon; ++T) {
      const Benchmark b = cfg.make(T);
      double worst = 0.0;
      for (int t = 0; t < T; ++t) {
        for (int k = 0; k <= t; ++k) {
          const double G = (double)(2 * k - t);
          const double here = conditional_value(b, t, G);
          const double split = 0.5 * (conditional_value(b, t + 1, G - 1.0) +
                                      conditional_value(b, t + 1, G + 1.0));
          worst = std::max(worst, std::fabs(split - here) / std::max(1.0, std::fabs(here)));
        }
      }
      report.line(worst <= 1e-9, "martingale", cfg.label, T, 0.0, worst, 1e-9);
    }

    // assumption-free backward induction on a discretized game
    if (a.grid) {
      for (int T = 1; T <= std::min(a.max_horizon, 6); ++T) {
        const Benchmark b = cfg.make(T);
        const double expected = game_value(b).exact_value;
        const GridMinimaxResult r = grid_minimax_value(b);
        const bool ok = std::fabs(r.value - expected) <= 5e-3;
        report.line(ok, "grid_induction", cfg.label, T, expected, r.value, 5e-3);
        report.line(r.adversary_max_at_endpoints, "grid_endpoint_maximum", cfg.label, T,
                    1.0, r.adversary_max_at_endpoints ? 1.0 : 0.0, 0.0);
      }
    }
  }
  return report.all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minimax play for unconstrained online linear games", "olo"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {"quad", "abs", "exp", "symexp"};
  const std::vector<std::string> formats = {"csv", "json"};
  const std::vector<std::string> strategies = {"auto",    "gd",       "hypercube",
                                               "betting", "symmetric", "generic"};
  const std::vector<std::string> adversaries = {"random", "greedy", "biased", "replay",
                                                "minimax"};

  std::string config_path;  // handled before parsing; registered for help and binding
  ValueArgs value_args;
  CLI::App* value = app.add_subcommand("value", "game values across a horizon range");
  value->add_option("--config", config_path, "flat key=value file with defaults for these flags");
  value->add_option("--kind", value_args.kind, "benchmark family")
      ->required()
      ->check(CLI::IsMember(kinds));
  value->add_option("--t", value_args.horizons, "horizon N or range lo..hi:step")
      ->required();
  value->add_option("--sigma", value_args.sigma, "quadratic curvature");
  value->add_option("--alpha", value_args.alpha, "exponential scaling exponent");
  value->add_option("--format", value_args.format)->check(CLI::IsMember(formats));
  value->add_option("--out", value_args.out_path, "write the table here instead of stdout");

  PlayArgs play_args;
  CLI::App* play = app.add_subcommand("play", "run a full game");
  play->add_option("--config", config_path, "flat key=value file with defaults for these flags");
  play->add_option("--kind", play_args.kind, "benchmark family")
      ->required()
      ->check(CLI::IsMember(kinds));
  play->add_option("--t", play_args.horizon, "horizon")->required();
  play->add_option("--sigma", play_args.sigma, "quadratic curvature");
  play->add_option("--alpha", play_args.alpha, "exponential scaling exponent");
  play->add_option("--dim", play_args.dimension, "game dimension");
  play->add_option("--strategy", play_args.strategy, "player strategy")
      ->check(CLI::IsMember(strategies));
  play->add_option("--adversary", play_args.adversary, "gradient source")
      ->check(CLI::IsMember(adversaries));
  play->add_option("--p", play_args.bias, "biased coin probability of +1");
  play->add_option("--gradients", play_args.gradients_path, "replay file, one value per line");
  play->add_option("--seed", play_args.seed, "root seed for randomized adversaries");
  play->add_option("--format", play_args.format)->check(CLI::IsMember(formats));
  play->add_option("--out", play_args.out_path, "write the transcript here");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "check closed forms against oracles");
  verify->add_option("--config", config_path, "flat key=value file with defaults for these flags");
  verify->add_option("--max-t", verify_args.max_horizon, "largest horizon checked");
  verify->add_flag("--grid", verify_args.grid, "also run grid backward induction");

  BetArgs bet_args;
  CLI::App* bet = app.add_subcommand("bet", "run a budgeted betting session");
  bet->add_option("--config", config_path, "flat key=value file with defaults for these flags");
  bet->add_option("--t", bet_args.horizon, "horizon")->required();
  bet->add_option("--alpha", bet_args.alpha, "exponential scaling exponent");
  bet->add_option("--budget", bet_args.budget, "initial bankroll");
  bet->add_option("--adversary", bet_args.adversary, "gradient source")
      ->check(CLI::IsMember(adversaries));
  bet->add_option("--p", bet_args.bias, "biased coin probability of +1");
  bet->add_option("--gradients", bet_args.gradients_path, "replay file, one value per line");
  bet->add_option("--seed", bet_args.seed, "root seed for randomized adversaries");
  bet->add_option("--format", bet_args.format)->check(CLI::IsMember(formats));
  bet->add_option("--out", bet_args.out_path, "write the session here");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = with_config_applied(args);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  std::reverse(args.begin(), args.end());  // CLI::App::parse consumes back to front
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(value)) return run_value(value_args);
    if (app.got_subcommand(play)) return run_play(play_args);
    if (app.got_subcommand(verify)) return run_verify(verify_args);
    if (app.got_subcommand(bet)) return run_bet(bet_args);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
