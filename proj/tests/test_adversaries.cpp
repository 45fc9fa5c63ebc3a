#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <olo/adversaries.hpp>
#include <olo/benchmarks.hpp>
#include <olo/strategies.hpp>

using Catch::Approx;
using namespace olo;

namespace {

std::vector<double> draw(Adversary a, int count, const PlayerState& s = {100, 0, 0.0},
                         double play = 0.0) {
  std::vector<double> out;
  PlayerState state = s;
  for (int i = 0; i < count; ++i) {
    out.push_back(a.next_gradient(state, play));
    state.rounds_played = std::min(state.rounds_played + 1, state.horizon - 1);
  }
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

}  // namespace

TEST_CASE("random adversary: seed-deterministic fair signs", "[adversaries]") {
  const std::vector<double> a = draw(Adversary::rademacher_random(42), 100);
  const std::vector<double> b = draw(Adversary::rademacher_random(42), 100);
  CHECK(a == b);
  for (double g : a) CHECK((g == 1.0 || g == -1.0));

  const std::vector<double> c = draw(Adversary::rademacher_random(43), 100);
  CHECK(a != c);

  // a fair coin should not be wildly lopsided over 100 draws
  double sum = 0.0;
  for (double g : a) sum += g;
  CHECK(std::fabs(sum) < 50.0);
}

TEST_CASE("greedy adversary: sign of the play, ties to +1", "[adversaries]") {
  Adversary a = Adversary::greedy();
  const PlayerState s{10, 0, 0.0};
  CHECK(a.next_gradient(s, 0.5) == 1.0);
  CHECK(a.next_gradient(s, -0.3) == -1.0);
  CHECK(a.next_gradient(s, 0.0) == 1.0);
}

TEST_CASE("biased coin: edge probabilities and empirical mean", "[adversaries]") {
  for (double g : draw(Adversary::biased_coin(1.0, 7), 50)) CHECK(g == 1.0);
  for (double g : draw(Adversary::biased_coin(0.0, 7), 50)) CHECK(g == -1.0);

  const std::vector<double> sample = draw(Adversary::biased_coin(0.25, 99), 20000);
  double mean = 0.0;
  for (double g : sample) mean += g;
  mean /= (double)sample.size();
  CHECK(mean == Approx(-0.5).margin(0.03));

  CHECK_THROWS_AS(Adversary::biased_coin(-0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Adversary::biased_coin(1.1, 1), std::invalid_argument);
}

TEST_CASE("replay adversary: plays the sequence then refuses", "[adversaries]") {
  Adversary a = Adversary::replay({0.5, -1.0, 0.25});
  const PlayerState s{3, 0, 0.0};
  CHECK(a.next_gradient(s, 0.0) == 0.5);
  CHECK(a.next_gradient(s, 0.0) == -1.0);
  CHECK(a.next_gradient(s, 0.0) == 0.25);
  CHECK_THROWS_AS(a.next_gradient(s, 0.0), std::out_of_range);

  CHECK_THROWS_AS(Adversary::replay({0.5, 1.5}), std::invalid_argument);
  CHECK_THROWS_AS(Adversary::replay({-2.0}), std::invalid_argument);
}

TEST_CASE("replay file: one value per line, blanks skipped, junk rejected",
          "[adversaries]") {
  const auto good = temp_file("olo_replay_good.txt", "0.5\n-1\n\n  \n0.25\n");
  Adversary a = Adversary::replay_from_file(good.string());
  const PlayerState s{3, 0, 0.0};
  CHECK(a.next_gradient(s, 0.0) == 0.5);
  CHECK(a.next_gradient(s, 0.0) == -1.0);
  CHECK(a.next_gradient(s, 0.0) == 0.25);
  std::filesystem::remove(good);

  const auto junk = temp_file("olo_replay_junk.txt", "0.5\nnope\n");
  CHECK_THROWS_AS(Adversary::replay_from_file(junk.string()), std::runtime_error);
  std::filesystem::remove(junk);

  const auto trailing = temp_file("olo_replay_trailing.txt", "0.5 extra\n");
  CHECK_THROWS_AS(Adversary::replay_from_file(trailing.string()), std::runtime_error);
  std::filesystem::remove(trailing);

  const auto out_of_range = temp_file("olo_replay_range.txt", "0.5\n7\n");
  CHECK_THROWS_AS(Adversary::replay_from_file(out_of_range.string()),
                  std::invalid_argument);
  std::filesystem::remove(out_of_range);

  CHECK_THROWS_AS(Adversary::replay_from_file("/no/such/file/olo.txt"),
                  std::runtime_error);
}

TEST_CASE("minimax adversary: punishes the play direction, ties to +1",
          "[adversaries]") {
  const Benchmark quad = Benchmark::quadratic(1.0, 1);
  Adversary a = Adversary::minimax(quad);
  const PlayerState start{1, 0, 0.0};
  // x = 0 makes both branches worth 1/2; the tie goes to +1
  CHECK(a.next_gradient(start, 0.0) == 1.0);
  CHECK(a.next_gradient(start, 0.3) == 1.0);
  CHECK(a.next_gradient(start, -0.3) == -1.0);
}

TEST_CASE("minimax adversary against the minimax strategy realizes the game value",
          "[adversaries]") {
  for (int T = 1; T <= 8; ++T) {
    const Benchmark benchmarks[] = {
        Benchmark::quadratic(1.0, T),
        Benchmark::absolute_value(T),
        Benchmark::exp_one_sided(0.5, T),
        Benchmark::exp_symmetric(0.5, T),
    };
    for (const Benchmark& b : benchmarks) {
      const StrategyFn strategy = minimax_strategy(b);
      Adversary adversary = Adversary::minimax(b);
      PlayerState s{T, 0, 0.0};
      double loss = 0.0;
      for (int t = 0; t < T; ++t) {
        const double x = strategy(s);
        const double g = adversary.next_gradient(s, x);
        loss += g * x;
        s.rounds_played = t + 1;
        s.gradient_sum += g;
      }
      const double regret = loss - benchmark_loss(b, s.gradient_sum);
      INFO("kind=" << to_string(b.kind) << " T=" << T);
      CHECK(regret == Approx(game_value(b).exact_value).epsilon(1e-9).margin(1e-9));
    }
  }
}
