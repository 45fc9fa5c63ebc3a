// Prints how each family's exact game value tracks its growth law as the
// horizon stretches.

#include <cstdio>

#include <olo/olo.hpp>

int main() {
  using namespace olo;

  std::printf("%-8s %-10s %14s %14s %10s\n", "kind", "T", "exact", "asymptote", "ratio");
  for (GameKind kind : {GameKind::quadratic, GameKind::absolute_value,
                        GameKind::exp_one_sided, GameKind::exp_symmetric}) {
    for (int T : {4, 16, 64, 256, 1024}) {
      const GameValueReport r = game_value(make_benchmark(kind, T));
      std::printf("%-8s %-10d %14.8f %14.8f %10.6f\n", to_string(kind), T, r.exact_value,
                  r.asymptote, r.ratio);
    }
  }
  return 0;
}
