// Runs one budgeted betting session against a biased coin and shows the
// wealth trajectory hitting its guaranteed floor.

#include <cmath>
#include <cstdio>

#include <olo/olo.hpp>

int main() {
  using namespace olo;

  const int horizon = 50;
  const double alpha = 0.5;
  const double budget = 100.0;

  const BettingSession s =
      betting_session(horizon, alpha, budget, Adversary::biased_coin(0.7, 42));

  std::printf("round  bet          outcome  wealth\n");
  for (size_t t = 0; t < s.rounds.size(); t += 7) {
    const BettingRound& r = s.rounds[t];
    std::printf("%-6zu %-12.6f %+.0f       %.6f\n", t + 1, r.bet, r.outcome, r.wealth);
  }

  const double floor = budget * std::exp(std::fabs(s.gradient_sum) / std::sqrt((double)horizon)) /
                       symmetric_worst_case_loss();
  std::printf("\nfinal wealth    %.6f\n", s.final_wealth);
  std::printf("min wealth      %.6f\n", s.min_wealth);
  std::printf("gradient sum    %+.0f\n", s.gradient_sum);
  std::printf("guaranteed      %.6f\n", floor);
  return 0;
}
