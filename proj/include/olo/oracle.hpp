#pragma once

// Independent slow paths for checking the closed forms.
//
//   exhaustive_value    averages -L over every {-1,+1}^T sequence and
//                       cross-checks the average against the binomial
//                       lattice sum before returning it.
//   grid_minimax_value  backward induction over a discretized play range
//                       and gradient grid, assuming nothing about where the
//                       adversary's maximum sits. Gradients run over a grid
//                       of [-1, 1] that includes interior points, so the
//                       fact that the inner maximum lands on the endpoints
//                       comes out as a finding, not an assumption.
//   worst_case_regret   exact maximum of a strategy's regret over the full
//                       +-1 gradient tree, with a witness sequence.
//
// Horizons are deliberately capped: these paths cost 2^T or worse.

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "benchmarks.hpp"
#include "strategies.hpp"

namespace olo {

inline constexpr int kMaxExhaustiveHorizon = 16;
inline constexpr int kMaxGridHorizon = 8;

namespace detail {

inline int effective_rounds(const Benchmark& b, int rounds, int cap, const char* who) {
  const int T = rounds < 0 ? b.horizon : rounds;
  if (T < 0) throw std::invalid_argument(std::string(who) + ": rounds must be >= 0");
  if (T > cap) {
    throw std::invalid_argument(std::string(who) + ": horizon exceeds cap of " +
                                std::to_string(cap));
  }
  return T;
}

}  // namespace detail

// Average of -L over all 2^T sign sequences. rounds = -1 plays the
// benchmark's own horizon; passing 0 gives -L(0).
inline double exhaustive_value(const Benchmark& b, int rounds = -1) {
  const int T = detail::effective_rounds(b, rounds, kMaxExhaustiveHorizon, "exhaustive_value");
  detail::StableSum acc;
  const uint64_t sequences = 1ull << T;
  for (uint64_t mask = 0; mask < sequences; ++mask) {
    // popcount gives the number of +1 draws in this sequence
    const int plus = std::popcount(mask);
    const double G = 2.0 * plus - T;
    acc.add(-benchmark_loss(b, G));
  }
  const double by_sequence = acc.value() / (double)sequences;
  const double by_lattice =
      expect(RademacherSum{T}, [&](double g) { return -benchmark_loss(b, g); });
  if (std::fabs(by_sequence - by_lattice) >
      1e-9 * std::max(1.0, std::fabs(by_lattice))) {
    throw std::logic_error("exhaustive_value: sequence and lattice paths disagree");
  }
  return by_sequence;
}

struct OracleConfig {
  int rounds = -1;      // -1: use the benchmark's horizon
  double x_lo = 0.0;    // play range; leave both at 0 for an automatic range
  double x_hi = 0.0;
  double x_step = 1e-3;
  double g_step = 0.5;  // gradient grid spacing over [-1, 1]
};

struct GridMinimaxResult {
  double value = 0.0;
  // true when, at every state's chosen play, no interior gradient beat the
  // endpoints g = -1 and g = +1 by more than the accumulated discretization
  // error of the value table at that level
  bool adversary_max_at_endpoints = true;
  // largest margin by which an interior gradient beat the endpoints, over
  // all states; <= 0 means the endpoints won everywhere outright
  double endpoint_deficit = 0.0;
  long long states = 0;
};

namespace detail {

// Wide enough to contain every play any of the families makes over T rounds.
inline double default_play_range(const Benchmark& b, int T) {
  const double base = (double)T + 2.0;
  if (b.kind == GameKind::quadratic) return base * std::max(1.0, 1.0 / b.sigma);
  return base;
}

}  // namespace detail

// Backward induction over a discretized game: plays on an x grid, gradients
// on a g grid. Knows only the terminal payoff -L; no closed forms anywhere.
// Throws if the minimizing play lands on the edge of the x range, since the
// true minimum could then lie outside it.
inline GridMinimaxResult grid_minimax_value(const Benchmark& b, const OracleConfig& cfg = {}) {
  const int T = detail::effective_rounds(b, cfg.rounds, kMaxGridHorizon, "grid_minimax_value");
  if (!(cfg.x_step > 0.0)) throw std::invalid_argument("grid_minimax_value: x_step must be > 0");
  if (!(cfg.g_step > 0.0) || cfg.g_step > 2.0) {
    throw std::invalid_argument("grid_minimax_value: g_step must lie in (0, 2]");
  }
  // gradient grid g_j = -1 + 2 j / K, j = 0..K
  const int K = (int)std::llround(2.0 / cfg.g_step);

  double x_lo = cfg.x_lo, x_hi = cfg.x_hi;
  if (x_lo == 0.0 && x_hi == 0.0) {
    const double r = detail::default_play_range(b, T);
    x_lo = -r;
    x_hi = r;
  }
  if (!(x_lo < x_hi)) throw std::invalid_argument("grid_minimax_value: empty x range");
  const long long nx = (long long)std::floor((x_hi - x_lo) / cfg.x_step) + 1;

  // Gradient sums reachable at level t are -t + 2 J / K for J = 0..tK, so
  // each level is a flat array indexed by J and a step by g_j moves J by j.
  std::vector<double> next((size_t)(T * K) + 1);
  for (int J = 0; J <= T * K; ++J) {
    next[(size_t)J] = -benchmark_loss(b, -T + 2.0 * J / K);
  }

  GridMinimaxResult result;
  for (int t = T - 1; t >= 0; --t) {
    std::vector<double> current((size_t)(t * K) + 1);
    for (int J = 0; J <= t * K; ++J) {
      ++result.states;
      double best = std::numeric_limits<double>::infinity();
      long long best_i = -1;
      for (long long i = 0; i < nx; ++i) {
        const double x = x_lo + (double)i * cfg.x_step;
        double worst = -std::numeric_limits<double>::infinity();
        for (int j = 0; j <= K; ++j) {
          const double g = -1.0 + 2.0 * j / K;
          const double v = g * x + next[(size_t)(J + j)];
          if (v > worst) worst = v;
        }
        if (worst < best) {
          best = worst;
          best_i = i;
        }
      }
      if (best_i == 0 || best_i == nx - 1) {
        throw std::runtime_error("grid_minimax_value: minimizer hit the x-range edge; widen it");
      }
      // With the minimizing play fixed, see whether any interior gradient
      // beats both endpoints. The table entries at level t + 1 sit above the
      // continuum values by at most x_step / 2 per remaining level (the
      // x-grid minimum overshoots the true minimum of a piecewise-linear
      // function by at most half a step, and the error only shrinks through
      // the averaging above), so a win inside that band is discretization
      // noise, not an interior maximum.
      const double x = x_lo + (double)best_i * cfg.x_step;
      const double at_ends =
          std::max(-x + next[(size_t)J], x + next[(size_t)(J + K)]);
      const double slack = 0.5 * cfg.x_step * (double)(T - t) +
                           1e-9 * std::max(1.0, std::fabs(at_ends));
      for (int j = 1; j < K; ++j) {
        const double g = -1.0 + 2.0 * j / K;
        const double margin = g * x + next[(size_t)(J + j)] - at_ends;
        if (margin > result.endpoint_deficit) result.endpoint_deficit = margin;
        if (margin > slack) result.adversary_max_at_endpoints = false;
      }
      current[(size_t)J] = best;
    }
    next = std::move(current);
  }
  result.value = next[0];
  return result;
}

struct WorstCaseRegret {
  double regret = -std::numeric_limits<double>::infinity();
  std::vector<int> witness;  // +-1 gradient sequence attaining it
};

// Exact worst-case regret of a strategy over every +-1 gradient sequence of
// the given length, by walking the full binary tree.
inline WorstCaseRegret worst_case_regret(const StrategyFn& strategy, const Benchmark& b,
                                         int rounds = -1) {
  const int T = detail::effective_rounds(b, rounds, kMaxExhaustiveHorizon, "worst_case_regret");
  WorstCaseRegret result;
  std::vector<int> path((size_t)T, 0);

  // depth-first over gradient choices; loss and gradient_sum carried down
  auto walk = [&](auto&& self, int t, double gradient_sum, double loss) -> void {
    if (t == T) {
      const double regret = loss - benchmark_loss(b, gradient_sum);
      if (regret > result.regret) {
        result.regret = regret;
        result.witness = path;
      }
      return;
    }
    const double x = strategy(PlayerState{T, t, gradient_sum});
    for (int g = -1; g <= 1; g += 2) {
      path[(size_t)t] = g;
      self(self, t + 1, gradient_sum + g, loss + g * x);
    }
  };
  walk(walk, 0, 0.0, 0.0);
  return result;
}

}  // namespace olo
