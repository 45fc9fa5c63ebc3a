#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <olo/rademacher.hpp>

#include "enumeration.hpp"

using Catch::Approx;
using namespace olo;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("pmf: frozen point values", "[rademacher]") {
  CHECK(pmf(RademacherSum{0}, 0) == 1.0);
  CHECK(pmf(RademacherSum{2}, 0) == 0.5);
  CHECK(pmf(RademacherSum{3}, 1) == 0.375);

  // off the lattice: wrong parity or out of range
  CHECK(pmf(RademacherSum{2}, 1) == 0.0);
  CHECK(pmf(RademacherSum{2}, 4) == 0.0);
  CHECK(log_pmf(RademacherSum{2}, 1) == -kInf);
  CHECK(log_pmf(RademacherSum{2}, -4) == -kInf);

  CHECK_THROWS_AS(pmf(RademacherSum{-1}, 0), std::invalid_argument);
}

TEST_CASE("pmf: matches sequence enumeration", "[rademacher]") {
  for (int m = 0; m <= 12; ++m) {
    for (long long b = -m; b <= m; b += 2) {
      INFO("m=" << m << " b=" << b);
      CHECK(pmf(RademacherSum{m}, b) == Approx(bruteforce::enum_pmf(m, b)).margin(1e-14));
    }
  }
}

TEST_CASE("pmf: sums to one and is symmetric", "[rademacher]") {
  for (int m : {0, 1, 5, 20, 40, 41, 100, 1000}) {
    const RademacherSum d{m};
    double total = 0.0;
    for (long long b = -m; b <= m; b += 2) {
      total += pmf(d, b);
      CHECK(pmf(d, b) == pmf(d, -b));
    }
    INFO("m=" << m);
    CHECK(total == Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("pmf: log path agrees with the exact path at the cutoff", "[rademacher]") {
  const RademacherSum d{40};
  for (long long b = -40; b <= 40; b += 2) {
    const double exact = pmf(d, b, 40);
    const double via_log = pmf(d, b, 0);
    INFO("b=" << b);
    CHECK(via_log == Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("tails: frozen examples", "[rademacher]") {
  const TailProbabilities none = tails(RademacherSum{1}, -1.0);
  CHECK(none.below == 0.0);
  CHECK(none.above == 0.5);
  CHECK(none.method == TailMethod::exact_sum);

  const TailProbabilities split = tails(RademacherSum{2}, 0.0);
  CHECK(split.below == Approx(0.25).margin(1e-15));
  CHECK(split.above == Approx(0.25).margin(1e-15));

  // threshold off the lattice: strict tails cover everything
  const TailProbabilities half = tails(RademacherSum{4}, 0.5);
  CHECK(half.below == Approx(0.6875).margin(1e-15));  // 11/16
  CHECK(half.above == Approx(0.3125).margin(1e-15));  // 5/16
  CHECK(half.below + half.above == Approx(1.0).margin(1e-15));
}

TEST_CASE("tails: matches sequence enumeration", "[rademacher]") {
  for (int m = 0; m <= 12; ++m) {
    for (double thr : {-(double)m - 0.5, -2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 2.25,
                       (double)m + 1.0}) {
      const TailProbabilities p = tails(RademacherSum{m}, thr);
      INFO("m=" << m << " thr=" << thr);
      CHECK(p.below == Approx(bruteforce::enum_below(m, thr)).margin(1e-13));
      CHECK(p.above == Approx(bruteforce::enum_above(m, thr)).margin(1e-13));
    }
  }
}

TEST_CASE("tails: strict tails plus point mass cover everything", "[rademacher]") {
  std::mt19937 rng(7);
  for (int m : {1, 2, 3, 7, 20, 101, 1000, 9999}) {
    const RademacherSum d{m};
    std::uniform_int_distribution<int> pick(-m - 1, m + 1);
    for (int trial = 0; trial < 20; ++trial) {
      const bool on_lattice = trial % 2 == 0;
      double thr = (double)pick(rng);
      if (on_lattice) {
        // snap to the lattice parity
        if (((long long)thr + m) % 2 != 0) thr += 1.0;
      } else {
        thr += 0.5;
      }
      const TailProbabilities p = tails(d, thr);
      const double point = std::floor(thr) == thr ? pmf(d, (long long)thr) : 0.0;
      INFO("m=" << m << " thr=" << thr);
      CHECK(p.below + p.above + point == Approx(1.0).margin(1e-12));
    }
  }
}

TEST_CASE("tails: beta path agrees with exact summation at the crossover", "[rademacher]") {
  TailOptions force_beta;
  force_beta.exact_max = 100;

  for (int m : {500, 10000}) {
    const RademacherSum d{m};
    for (double thr : {0.0, 0.5, 17.0, -23.5, 2.0, 100.5, -1.0}) {
      const TailProbabilities exact = tails(d, thr);
      const TailProbabilities beta = tails(d, thr, force_beta);
      REQUIRE(exact.method == TailMethod::exact_sum);
      REQUIRE(beta.method == TailMethod::incomplete_beta);
      INFO("m=" << m << " thr=" << thr);
      CHECK(std::fabs(beta.below - exact.below) <= 1e-8);
      CHECK(std::fabs(beta.above - exact.above) <= 1e-8);
      // in practice the two agree far more tightly at moderate m
      if (m == 500) {
        CHECK(std::fabs(beta.below - exact.below) <= 1e-12);
        CHECK(std::fabs(beta.above - exact.above) <= 1e-12);
      }
    }
  }
}

TEST_CASE("tails: normal approximation is coarse but sane", "[rademacher]") {
  TailOptions force_normal;
  force_normal.exact_max = 100;
  force_normal.approximation = TailMethod::normal_approx;

  const RademacherSum d{10000};
  for (double thr : {0.0, 0.5, 50.0, -120.5}) {
    const TailProbabilities exact = tails(d, thr);
    const TailProbabilities normal = tails(d, thr, force_normal);
    REQUIRE(normal.method == TailMethod::normal_approx);
    INFO("thr=" << thr);
    CHECK(std::fabs(normal.below - exact.below) <= 1e-2);
    CHECK(std::fabs(normal.above - exact.above) <= 1e-2);
  }
}

TEST_CASE("tails: infinite and NaN thresholds", "[rademacher]") {
  const TailProbabilities hi = tails(RademacherSum{6}, kInf);
  CHECK(hi.below == 1.0);
  CHECK(hi.above == 0.0);
  const TailProbabilities lo = tails(RademacherSum{6}, -kInf);
  CHECK(lo.below == 0.0);
  CHECK(lo.above == 1.0);
  CHECK_THROWS_AS(tails(RademacherSum{6}, std::nan("")), std::invalid_argument);
}

TEST_CASE("mean_abs_deviation: frozen values and error cases", "[rademacher]") {
  CHECK(mean_abs_deviation(2) == Approx(1.0).margin(1e-14));
  CHECK(mean_abs_deviation(4) == Approx(1.5).margin(1e-14));

  for (int T = 2; T <= 14; T += 2) {
    INFO("T=" << T);
    CHECK(mean_abs_deviation(T) ==
          Approx(bruteforce::enum_expect(T, [](double g) { return std::fabs(g); }))
              .epsilon(1e-13));
  }

  CHECK_THROWS_AS(mean_abs_deviation(3), std::domain_error);
  CHECK_THROWS_AS(mean_abs_deviation(0), std::invalid_argument);
  CHECK_THROWS_AS(mean_abs_deviation(-2), std::invalid_argument);
}

TEST_CASE("mean_abs_deviation: stays under its growth law", "[rademacher]") {
  double previous_ratio = 0.0;
  for (int T = 2; T <= 2000; T += 2) {
    const double law = std::sqrt(2.0 * T / std::numbers::pi);
    const double ratio = mean_abs_deviation(T) / law;
    INFO("T=" << T);
    CHECK(ratio <= 1.0);
    CHECK(ratio > previous_ratio);
    previous_ratio = ratio;
  }
}

TEST_CASE("central_binomial_ratio: correction constant stays bracketed", "[rademacher]") {
  CHECK(central_binomial_ratio(1) == Approx(std::sqrt(std::numbers::pi) / 2.0).margin(1e-14));

  double previous = 0.0;
  for (int M = 1; M <= 200; ++M) {
    const double ratio = central_binomial_ratio(M);
    const double c = M * (1.0 - ratio);
    INFO("M=" << M);
    CHECK(ratio < 1.0);
    CHECK(ratio > previous);
    CHECK(c > 1.0 / 9.0);
    CHECK(c < 1.0 / 8.0);
    previous = ratio;
  }
  CHECK_THROWS_AS(central_binomial_ratio(0), std::invalid_argument);
}

TEST_CASE("expect: frozen values", "[rademacher]") {
  CHECK(expect(RademacherSum{2}, [](double g) { return std::fabs(g); }) ==
        Approx(1.0).margin(1e-15));
  // zero summands: the expectation is just f at the offset
  CHECK(expect(RademacherSum{0}, [](double g) { return std::exp(g); }, 0.7) ==
        Approx(std::exp(0.7)).margin(1e-15));
  const double c = std::cosh(0.5);
  CHECK(expect(RademacherSum{4}, [](double g) { return std::exp(g / 2.0); }) ==
        Approx(c * c * c * c).epsilon(1e-14));
}

TEST_CASE("expect: matches sequence enumeration on assorted functions", "[rademacher]") {
  const auto cubic = [](double g) { return g * g * g - 2.0 * g + 1.0; };
  const auto soft = [](double g) { return std::log1p(std::exp(-std::fabs(g))); };
  for (int m = 0; m <= 16; ++m) {
    for (double offset : {0.0, -1.5, 2.25}) {
      INFO("m=" << m << " offset=" << offset);
      CHECK(expect(RademacherSum{m}, cubic, offset) ==
            Approx(bruteforce::enum_expect(m, cubic, offset)).margin(1e-10).epsilon(1e-10));
      CHECK(expect(RademacherSum{m}, soft, offset) ==
            Approx(bruteforce::enum_expect(m, soft, offset)).margin(1e-12).epsilon(1e-12));
    }
  }
}

TEST_CASE("expect: rejects non-finite integrands", "[rademacher]") {
  const auto spike = [](double g) { return g == 0.0 ? kInf : 1.0; };
  CHECK_THROWS_AS(expect(RademacherSum{2}, spike), std::domain_error);
  const auto hole = [](double g) { return g == 0.0 ? std::nan("") : 1.0; };
  CHECK_THROWS_AS(expect(RademacherSum{2}, hole), std::domain_error);
}

TEST_CASE("log_expect: agrees with expect where both are finite", "[rademacher]") {
  for (int m = 0; m <= 16; ++m) {
    const double direct = std::log(expect(RademacherSum{m}, [](double g) {
      return std::exp(g / 3.0);
    }));
    const double stable = log_expect(RademacherSum{m}, [](double g) { return g / 3.0; });
    INFO("m=" << m);
    CHECK(stable == Approx(direct).margin(1e-12));
  }
}

TEST_CASE("log_expect: survives scales that overflow a direct sum", "[rademacher]") {
  // E[e^{B_m}] = cosh(1)^m; at m = 800 that overflows double but its log
  // is perfectly representable.
  const int m = 800;
  const double expected = m * std::log(std::cosh(1.0));
  CHECK(log_expect(RademacherSum{m}, [](double g) { return g; }) ==
        Approx(expected).epsilon(1e-12));
}

TEST_CASE("log_expect: zero mass is fine, NaN and +inf are not", "[rademacher]") {
  // f vanishes on the negative side: E = Pr(B_2 >= 0) = 3/4
  const double v = log_expect(RademacherSum{2}, [](double g) { return g < 0.0 ? -kInf : 0.0; });
  CHECK(v == Approx(std::log(0.75)).margin(1e-14));

  CHECK(log_expect(RademacherSum{2}, [](double) { return -kInf; }) == -kInf);
  CHECK_THROWS_AS(log_expect(RademacherSum{2}, [](double) { return kInf; }),
                  std::domain_error);
  CHECK_THROWS_AS(log_expect(RademacherSum{2}, [](double) { return std::nan(""); }),
                  std::domain_error);
}
