#pragma once

// Player strategies. Each maps the current state (horizon, rounds played,
// running gradient sum) to the next play. The generic recipe reads the play
// off any conditional-value function:
//
//   x_{t+1} = ( V_{t+1}(G - 1) - V_{t+1}(G + 1) ) / 2,
//
// which makes the two extreme gradient continuations equally attractive to
// the adversary. The per-family closed forms below are that same recipe
// evaluated analytically, so they can be cross-checked against it state by
// state.

#include <cmath>
#include <functional>
#include <stdexcept>

#include "benchmarks.hpp"

namespace olo {

// Player's view of a game in progress.
struct PlayerState {
  int horizon = 1;          // T
  int rounds_played = 0;    // t, number of gradients already seen
  double gradient_sum = 0;  // g_1 + ... + g_t
};

namespace detail {

inline void require_playable(const PlayerState& s) {
  if (s.horizon < 1) throw std::invalid_argument("PlayerState: horizon must be >= 1");
  if (s.rounds_played < 0 || s.rounds_played >= s.horizon) {
    throw std::out_of_range("PlayerState: need 0 <= rounds_played < horizon to play");
  }
}

}  // namespace detail

// Next play from an arbitrary conditional-value function for round t + 1.
// value_next must be finite at gradient_sum - 1 and gradient_sum + 1.
template <class ValueFn>
double next_play_generic(ValueFn&& value_next, const PlayerState& s) {
  detail::require_playable(s);
  const double down = value_next(s.gradient_sum - 1.0);
  const double up = value_next(s.gradient_sum + 1.0);
  if (!std::isfinite(down) || !std::isfinite(up)) {
    throw std::domain_error("next_play_generic: conditional value is not finite");
  }
  return 0.5 * (down - up);
}

// Closed form for the quadratic family: constant-rate gradient descent.
inline double next_play_gd(double sigma, const PlayerState& s) {
  detail::require_sigma(sigma);
  detail::require_playable(s);
  return -s.gradient_sum / sigma;
}

// Closed form for the absolute-value family: the difference of the two
// strict tails of the remaining T - t - 1 rounds around -G_t. Always lands
// in [-1, 1] for any real gradient sum.
inline double next_play_hypercube(const PlayerState& s, const TailOptions& opt = {}) {
  detail::require_playable(s);
  const RademacherSum remaining{s.horizon - s.rounds_played - 1};
  const TailProbabilities p = tails(remaining, -s.gradient_sum, opt);
  return p.below - p.above;
}

// Closed form for the one-sided exponential family. Computed in log space;
// the result is never positive, which is what lets it be read as a bet.
inline double next_play_betting(double alpha, const PlayerState& s) {
  detail::require_alpha(alpha);
  detail::require_playable(s);
  const double a = std::pow((double)s.horizon, alpha);
  const int remaining_after = s.horizon - s.rounds_played - 1;
  const double log_magnitude = s.gradient_sum / a + std::log(std::sinh(1.0 / a)) +
                               remaining_after * detail::log_cosh(1.0 / a);
  return -std::exp(log_magnitude);
}

// Two one-sided bets back to back, one on each direction of the gradient sum.
inline double next_play_symmetric(double alpha, const PlayerState& s) {
  PlayerState mirrored = s;
  mirrored.gradient_sum = -s.gradient_sum;
  return next_play_betting(alpha, s) - next_play_betting(alpha, mirrored);
}

// Rescales a play so that a strategy with worst-case loss `worst_case_loss`
// never loses more than `budget`.
inline double scale_for_bankroll(double play, double budget, double worst_case_loss) {
  if (!(budget > 0.0)) throw std::invalid_argument("scale_for_bankroll: budget must be > 0");
  if (!(worst_case_loss > 0.0)) {
    throw std::invalid_argument("scale_for_bankroll: worst_case_loss must be > 0");
  }
  return play * budget / worst_case_loss;
}

// Worst-case cumulative loss of the symmetric betting strategy, any horizon.
inline double symmetric_worst_case_loss() { return 2.0 * std::sqrt(std::exp(1.0)); }

enum class StrategyKind { gradient_descent, hypercube, betting, symmetric_betting, generic };

inline const char* to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::gradient_descent: return "gd";
    case StrategyKind::hypercube: return "hypercube";
    case StrategyKind::betting: return "betting";
    case StrategyKind::symmetric_betting: return "symmetric";
    case StrategyKind::generic: return "generic";
  }
  return "?";
}

using StrategyFn = std::function<double(const PlayerState&)>;

// Binds a strategy kind to a benchmark's parameters. The generic kind plays
// from the benchmark's conditional value and works for every family.
inline StrategyFn make_strategy(StrategyKind kind, const Benchmark& b) {
  switch (kind) {
    case StrategyKind::gradient_descent:
      return [sigma = b.sigma](const PlayerState& s) { return next_play_gd(sigma, s); };
    case StrategyKind::hypercube:
      return [](const PlayerState& s) { return next_play_hypercube(s); };
    case StrategyKind::betting:
      return [alpha = b.alpha](const PlayerState& s) { return next_play_betting(alpha, s); };
    case StrategyKind::symmetric_betting:
      return [alpha = b.alpha](const PlayerState& s) { return next_play_symmetric(alpha, s); };
    case StrategyKind::generic:
      return [b](const PlayerState& s) {
        return next_play_generic(
            [&](double g) { return conditional_value(b, s.rounds_played + 1, g); }, s);
      };
  }
  throw std::invalid_argument("make_strategy: unknown kind");
}

// The closed-form minimax strategy matching the benchmark's family.
inline StrategyFn minimax_strategy(const Benchmark& b) {
  switch (b.kind) {
    case GameKind::quadratic: return make_strategy(StrategyKind::gradient_descent, b);
    case GameKind::absolute_value: return make_strategy(StrategyKind::hypercube, b);
    case GameKind::exp_one_sided: return make_strategy(StrategyKind::betting, b);
    case GameKind::exp_symmetric: return make_strategy(StrategyKind::symmetric_betting, b);
  }
  throw std::invalid_argument("minimax_strategy: unknown kind");
}

}  // namespace olo
