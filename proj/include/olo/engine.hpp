#pragma once

// Game runner. Plays an n-dimensional game coordinate by coordinate: the
// full game over the L-infinity gradient ball decomposes into n independent
// one-dimensional games, so each coordinate gets its own player state and
// its own adversary stream. Per-coordinate seeds are derived from the root
// seed with a fixed odd stride, which makes coordinate i of an n-dimensional
// run reproduce a one-dimensional run seeded with that coordinate's seed.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "adversaries.hpp"
#include "benchmarks.hpp"
#include "strategies.hpp"

namespace olo {

inline constexpr uint64_t kDefaultSeed = 12345;
inline constexpr uint64_t kCoordinateSeedStride = 0x9E3779B97F4A7C15ull;

inline uint64_t coordinate_seed(uint64_t root_seed, int coordinate) {
  return root_seed + kCoordinateSeedStride * (uint64_t)coordinate;
}

struct AdversaryConfig {
  AdversaryKind kind = AdversaryKind::rademacher_random;
  double bias = 0.5;            // biased_coin only
  std::vector<double> replay;   // replay only; shared by every coordinate
};

inline Adversary make_adversary(const AdversaryConfig& cfg, const Benchmark& b,
                                uint64_t seed) {
  switch (cfg.kind) {
    case AdversaryKind::rademacher_random: return Adversary::rademacher_random(seed);
    case AdversaryKind::greedy: return Adversary::greedy();
    case AdversaryKind::biased_coin: return Adversary::biased_coin(cfg.bias, seed);
    case AdversaryKind::replay: return Adversary::replay(cfg.replay);
    case AdversaryKind::minimax: return Adversary::minimax(b);
  }
  throw std::invalid_argument("make_adversary: unknown kind");
}

struct GameSpec {
  Benchmark benchmark;
  int dimension = 1;
  StrategyKind strategy = StrategyKind::generic;
  AdversaryConfig adversary;
  uint64_t seed = kDefaultSeed;
};

struct TranscriptRound {
  std::vector<double> play;      // x_t, one entry per coordinate
  std::vector<double> gradient;  // g_t
  double inst_loss = 0.0;        // <x_t, g_t>
};

struct Transcript {
  Benchmark benchmark;
  int dimension = 1;
  std::vector<TranscriptRound> rounds;
  std::vector<double> gradient_sums;  // per coordinate, after the last round
  double benchmark_value = 0.0;       // sum_i L(G_i)
  double loss = 0.0;                  // sum_t <x_t, g_t>
  double reward = 0.0;                // -loss
  double regret = 0.0;                // loss - benchmark_value
};

inline Transcript play_game(const GameSpec& spec) {
  if (spec.dimension < 1) throw std::invalid_argument("play_game: dimension must be >= 1");
  const Benchmark& b = spec.benchmark;
  const int T = b.horizon;
  const int n = spec.dimension;

  const StrategyFn strategy = make_strategy(spec.strategy, b);
  std::vector<Adversary> adversaries;
  adversaries.reserve((size_t)n);
  for (int i = 0; i < n; ++i) {
    adversaries.push_back(make_adversary(spec.adversary, b, coordinate_seed(spec.seed, i)));
  }

  std::vector<PlayerState> states((size_t)n, PlayerState{T, 0, 0.0});
  Transcript tr;
  tr.benchmark = b;
  tr.dimension = n;
  tr.rounds.reserve((size_t)T);

  double total_loss = 0.0;
  for (int t = 0; t < T; ++t) {
    TranscriptRound round;
    round.play.resize((size_t)n);
    round.gradient.resize((size_t)n);
    for (int i = 0; i < n; ++i) round.play[(size_t)i] = strategy(states[(size_t)i]);
    double inst = 0.0;
    for (int i = 0; i < n; ++i) {
      const double g = adversaries[(size_t)i].next_gradient(states[(size_t)i],
                                                            round.play[(size_t)i]);
      round.gradient[(size_t)i] = g;
      inst += round.play[(size_t)i] * g;
      states[(size_t)i].rounds_played = t + 1;
      states[(size_t)i].gradient_sum += g;
    }
    round.inst_loss = inst;
    total_loss += inst;
    tr.rounds.push_back(std::move(round));
  }

  tr.gradient_sums.resize((size_t)n);
  double bench = 0.0;
  for (int i = 0; i < n; ++i) {
    tr.gradient_sums[(size_t)i] = states[(size_t)i].gradient_sum;
    bench += benchmark_loss(b, states[(size_t)i].gradient_sum);
  }
  tr.benchmark_value = bench;
  tr.loss = total_loss;
  tr.reward = -total_loss;
  tr.regret = total_loss - bench;
  return tr;
}

// Regret recomputed from the raw plays and gradients, ignoring the cached
// totals. Rejects transcripts whose shape does not match the benchmark.
inline double regret_of(const Transcript& tr, const Benchmark& b) {
  if ((int)tr.rounds.size() != b.horizon) {
    throw std::invalid_argument("regret_of: transcript round count != benchmark horizon");
  }
  const size_t n = (size_t)tr.dimension;
  std::vector<double> sums(n, 0.0);
  double loss = 0.0;
  for (const TranscriptRound& round : tr.rounds) {
    if (round.play.size() != n || round.gradient.size() != n) {
      throw std::invalid_argument("regret_of: round width != transcript dimension");
    }
    for (size_t i = 0; i < n; ++i) {
      loss += round.play[i] * round.gradient[i];
      sums[i] += round.gradient[i];
    }
  }
  double bench = 0.0;
  for (size_t i = 0; i < n; ++i) bench += benchmark_loss(b, sums[i]);
  return loss - bench;
}

struct BettingRound {
  double bet = 0.0;      // signed stake actually wagered
  double outcome = 0.0;  // gradient g_t
  double wealth = 0.0;   // bankroll after the round
};

struct BettingSession {
  int horizon = 0;
  double alpha = 0.5;
  double budget = 0.0;
  std::vector<BettingRound> rounds;
  double final_wealth = 0.0;
  double min_wealth = 0.0;
  double gradient_sum = 0.0;
  int bets_exceeding_wealth = 0;  // rounds where |bet| > bankroll on hand
  bool went_negative = false;     // bankroll dipped below zero at some point
};

// Runs the symmetric betting strategy with stakes scaled to an initial
// budget, settling each round against the adversary's gradient. Whether the
// bankroll can dip negative mid-game (it stays nonnegative at the horizon)
// is exactly what the recorded min_wealth and the two counters measure, so
// violations are reported as data rather than rejected.
inline BettingSession betting_session(int horizon, double alpha, double budget,
                                      Adversary adversary) {
  detail::require_horizon(horizon);
  detail::require_alpha(alpha);
  if (!(budget > 0.0)) throw std::invalid_argument("betting_session: budget must be > 0");

  BettingSession session;
  session.horizon = horizon;
  session.alpha = alpha;
  session.budget = budget;
  session.rounds.reserve((size_t)horizon);
  session.min_wealth = budget;

  double wealth = budget;
  PlayerState state{horizon, 0, 0.0};
  for (int t = 0; t < horizon; ++t) {
    const double bet =
        scale_for_bankroll(next_play_symmetric(alpha, state), budget, symmetric_worst_case_loss());
    if (std::fabs(bet) > wealth) ++session.bets_exceeding_wealth;
    const double g = adversary.next_gradient(state, bet);
    wealth -= g * bet;
    session.rounds.push_back({bet, g, wealth});
    if (wealth < session.min_wealth) session.min_wealth = wealth;
    if (wealth < 0.0) session.went_negative = true;
    state.rounds_played = t + 1;
    state.gradient_sum += g;
  }
  session.final_wealth = wealth;
  session.gradient_sum = state.gradient_sum;
  return session;
}

struct ValueRow {
  int horizon = 0;
  GameValueReport value;
};

// game_value evaluated across a horizon range (inclusive ends, step >= 1).
inline std::vector<ValueRow> value_sweep(GameKind kind, int t_lo, int t_hi, int t_step,
                                         double sigma = 1.0, double alpha = 0.5) {
  if (t_lo < 1 || t_hi < t_lo || t_step < 1) {
    throw std::invalid_argument("value_sweep: need 1 <= t_lo <= t_hi and t_step >= 1");
  }
  std::vector<ValueRow> rows;
  for (int T = t_lo; T <= t_hi; T += t_step) {
    rows.push_back({T, game_value(make_benchmark(kind, T, sigma, alpha))});
  }
  return rows;
}

}  // namespace olo
