#pragma once

// The comparator side of an unconstrained online linear game: a concave
// benchmark function L of the final gradient sum G = g_1 + ... + g_T, with
// gradients drawn from [-1, 1]. Regret after T rounds is
//
//   sum_t g_t x_t  -  L(G),
//
// and the value of the game is the expectation of -L over a uniform
// {-1,+1}^T draw, evaluated here in closed form per family:
//
//   quadratic       L(G) = -G^2 / (2 sigma)              value T / (2 sigma)
//   absolute_value  L(G) = -|G|                          value E|B_T|
//   exp_one_sided   L(G) = -exp(G / T^alpha)             value cosh(T^-alpha)^T
//   exp_symmetric   L(G) = -exp(G/T^a) - exp(-G/T^a)     value 2 cosh(T^-alpha)^T
//
// Conditional values (the value of the game still to come after t rounds,
// given the running sum) follow the same closed forms and satisfy the
// exact halving recursion V_t(G) = (V_{t+1}(G-1) + V_{t+1}(G+1)) / 2.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rademacher.hpp"

namespace olo {

enum class GameKind { quadratic, absolute_value, exp_one_sided, exp_symmetric };

inline const char* to_string(GameKind kind) {
  switch (kind) {
    case GameKind::quadratic: return "quad";
    case GameKind::absolute_value: return "abs";
    case GameKind::exp_one_sided: return "exp";
    case GameKind::exp_symmetric: return "symexp";
  }
  return "?";
}

struct Benchmark {
  GameKind kind = GameKind::absolute_value;
  int horizon = 1;     // T, number of rounds
  double sigma = 1.0;  // quadratic curvature parameter
  double alpha = 0.5;  // exponential scaling exponent, in (0, 1/2]

  static Benchmark quadratic(double sigma, int horizon);
  static Benchmark absolute_value(int horizon);
  static Benchmark exp_one_sided(double alpha, int horizon);
  static Benchmark exp_symmetric(double alpha, int horizon);

  double exp_scale() const { return std::pow((double)horizon, alpha); }  // T^alpha
};

namespace detail {

inline void require_horizon(int horizon) {
  if (horizon < 1) throw std::invalid_argument("Benchmark: horizon must be >= 1");
}

inline void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("Benchmark: sigma must be positive and finite");
  }
}

inline void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 0.5)) {
    throw std::invalid_argument("Benchmark: alpha must lie in (0, 1/2]");
  }
}

// log cosh(x), stable for any magnitude: cosh never overflows on the way.
inline double log_cosh(double x) {
  const double a = std::fabs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - kLn2;
}

}  // namespace detail

inline Benchmark Benchmark::quadratic(double sigma, int horizon) {
  detail::require_sigma(sigma);
  detail::require_horizon(horizon);
  return Benchmark{GameKind::quadratic, horizon, sigma, 0.5};
}

inline Benchmark Benchmark::absolute_value(int horizon) {
  detail::require_horizon(horizon);
  return Benchmark{GameKind::absolute_value, horizon, 1.0, 0.5};
}

inline Benchmark Benchmark::exp_one_sided(double alpha, int horizon) {
  detail::require_alpha(alpha);
  detail::require_horizon(horizon);
  return Benchmark{GameKind::exp_one_sided, horizon, 1.0, alpha};
}

inline Benchmark Benchmark::exp_symmetric(double alpha, int horizon) {
  detail::require_alpha(alpha);
  detail::require_horizon(horizon);
  return Benchmark{GameKind::exp_symmetric, horizon, 1.0, alpha};
}

inline Benchmark make_benchmark(GameKind kind, int horizon, double sigma = 1.0,
                                double alpha = 0.5) {
  switch (kind) {
    case GameKind::quadratic: return Benchmark::quadratic(sigma, horizon);
    case GameKind::absolute_value: return Benchmark::absolute_value(horizon);
    case GameKind::exp_one_sided: return Benchmark::exp_one_sided(alpha, horizon);
    case GameKind::exp_symmetric: return Benchmark::exp_symmetric(alpha, horizon);
  }
  throw std::invalid_argument("make_benchmark: unknown kind");
}

// L(G), the benchmark the player's cumulative loss is measured against.
inline double benchmark_loss(const Benchmark& b, double G) {
  switch (b.kind) {
    case GameKind::quadratic:
      return -G * G / (2.0 * b.sigma);
    case GameKind::absolute_value:
      return -std::fabs(G);
    case GameKind::exp_one_sided:
      return -std::exp(G / b.exp_scale());
    case GameKind::exp_symmetric: {
      const double a = b.exp_scale();
      return -std::exp(G / a) - std::exp(-G / a);
    }
  }
  throw std::logic_error("benchmark_loss: unknown kind");
}

// The convex penalty paired with the benchmark: L(G) = min_x (G x + penalty(x))
// for every G, so -L is the convex conjugate of the penalty. Infinite values
// are legitimate (they encode a hard constraint on the play).
inline double penalty(const Benchmark& b, double x) {
  const double inf = std::numeric_limits<double>::infinity();
  switch (b.kind) {
    case GameKind::quadratic:
      return b.sigma * x * x / 2.0;
    case GameKind::absolute_value:
      return std::fabs(x) <= 1.0 ? 0.0 : inf;
    case GameKind::exp_one_sided: {
      if (x > 0.0) return inf;
      if (x == 0.0) return 0.0;  // limit of -a x log(-a x) + a x as x -> 0-
      const double ax = b.exp_scale() * x;
      return -ax * std::log(-ax) + ax;
    }
    case GameKind::exp_symmetric:
      throw std::logic_error("penalty: no closed form for the symmetric exponential family");
  }
  throw std::logic_error("penalty: unknown kind");
}

// Numerically minimizes G x + penalty(x) over a grid, for checking that the
// minimum reproduces L(G). Returns the grid minimum (possibly +infinity if
// the penalty is infinite on the whole grid).
inline double penalty_dual_check(const Benchmark& b, double G, double x_lo, double x_hi,
                                 double x_step) {
  if (!(x_step > 0.0) || !(x_lo <= x_hi)) {
    throw std::invalid_argument("penalty_dual_check: empty grid");
  }
  double best = std::numeric_limits<double>::infinity();
  const long long n = (long long)std::floor((x_hi - x_lo) / x_step) + 1;
  for (long long i = 0; i < n; ++i) {
    const double x = x_lo + (double)i * x_step;
    const double v = G * x + penalty(b, x);
    best = std::min(best, v);
  }
  return best;
}

struct GameValueReport {
  double exact_value = 0.0;
  double asymptote = 0.0;  // the family's growth law at this horizon
  double ratio = 0.0;      // exact_value / asymptote
};

// Full-game value and how close it sits to the family's asymptote:
// T/(2 sigma) for quadratic, sqrt(2T/pi) for absolute value, sqrt(e) for the
// one-sided exponential family and 2 sqrt(e) for the symmetric one.
inline GameValueReport game_value(const Benchmark& b) {
  const int T = b.horizon;
  GameValueReport r;
  switch (b.kind) {
    case GameKind::quadratic:
      r.exact_value = T / (2.0 * b.sigma);
      r.asymptote = r.exact_value;
      break;
    case GameKind::absolute_value:
      r.exact_value = T % 2 == 0 && T >= 2
                          ? mean_abs_deviation(T)
                          : expect(RademacherSum{T}, [](double g) { return std::fabs(g); });
      r.asymptote = std::sqrt(2.0 * T / std::numbers::pi);
      break;
    case GameKind::exp_one_sided:
      r.exact_value = std::exp(T * detail::log_cosh(1.0 / b.exp_scale()));
      r.asymptote = std::sqrt(std::exp(1.0));
      break;
    case GameKind::exp_symmetric:
      r.exact_value = 2.0 * std::exp(T * detail::log_cosh(1.0 / b.exp_scale()));
      r.asymptote = 2.0 * std::sqrt(std::exp(1.0));
      break;
  }
  r.ratio = r.exact_value / r.asymptote;
  return r;
}

// Value of the game still to come after t of T rounds, given the running
// gradient sum. The loss already paid is not part of this quantity. At
// t == T this is just -L(G). The exponential families are evaluated in log
// space so large horizons cannot overflow prematurely.
inline double conditional_value(const Benchmark& b, int t, double gradient_sum) {
  if (t < 0 || t > b.horizon) {
    throw std::out_of_range("conditional_value: t must lie in [0, horizon]");
  }
  const int remaining = b.horizon - t;
  switch (b.kind) {
    case GameKind::quadratic:
      return (gradient_sum * gradient_sum + (double)remaining) / (2.0 * b.sigma);
    case GameKind::absolute_value:
      return expect(RademacherSum{remaining}, [](double g) { return std::fabs(g); },
                    gradient_sum);
    case GameKind::exp_one_sided: {
      const double a = b.exp_scale();
      return std::exp(gradient_sum / a + remaining * detail::log_cosh(1.0 / a));
    }
    case GameKind::exp_symmetric: {
      const double a = b.exp_scale();
      const double tail = remaining * detail::log_cosh(1.0 / a);
      return std::exp(gradient_sum / a + tail) + std::exp(-gradient_sum / a + tail);
    }
  }
  throw std::logic_error("conditional_value: unknown kind");
}

}  // namespace olo
