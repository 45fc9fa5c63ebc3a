#pragma once

// Gradient sources. Every adversary emits one gradient per round, always
// inside [-1, 1]; the engine hands it the player's state and the play just
// made. Randomized adversaries draw from a self-contained 64-bit generator
// using raw bits only, so a given seed produces the same gradients on any
// platform.

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "benchmarks.hpp"
#include "errors.hpp"
#include "strategies.hpp"

namespace olo {

// One decimal number per line; blank lines are ignored. Values are not
// range-checked here; Adversary::replay does that.
inline std::vector<double> load_gradient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open gradient file: " + path);
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    double v;
    if (!(ls >> v)) {
      if (ls.eof()) continue;  // blank or whitespace-only line
      throw std::runtime_error("bad number at " + path + ":" + std::to_string(line_no));
    }
    std::string rest;
    if (ls >> rest) {
      throw std::runtime_error("trailing junk at " + path + ":" + std::to_string(line_no));
    }
    values.push_back(v);
  }
  return values;
}

enum class AdversaryKind { rademacher_random, greedy, biased_coin, replay, minimax };

inline const char* to_string(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::rademacher_random: return "random";
    case AdversaryKind::greedy: return "greedy";
    case AdversaryKind::biased_coin: return "biased";
    case AdversaryKind::replay: return "replay";
    case AdversaryKind::minimax: return "minimax";
  }
  return "?";
}

class Adversary {
 public:
  // Fair coin on {-1, +1}.
  static Adversary rademacher_random(uint64_t seed) {
    Adversary a(AdversaryKind::rademacher_random);
    a.rng_.seed(seed);
    return a;
  }

  // Plays the sign of the player's move: +1 when x >= 0, else -1.
  static Adversary greedy() { return Adversary(AdversaryKind::greedy); }

  // +1 with probability p, else -1.
  static Adversary biased_coin(double p, uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("biased_coin: p must lie in [0, 1]");
    }
    Adversary a(AdversaryKind::biased_coin);
    a.bias_ = p;
    a.rng_.seed(seed);
    return a;
  }

  // Fixed gradient sequence; each value must lie in [-1, 1]. Asking for more
  // gradients than the sequence holds is an error.
  static Adversary replay(std::vector<double> gradients) {
    for (double g : gradients) {
      if (!(g >= -1.0 && g <= 1.0)) {
        throw std::invalid_argument("replay: gradients must lie in [-1, 1]");
      }
    }
    Adversary a(AdversaryKind::replay);
    a.replay_ = std::move(gradients);
    return a;
  }

  static Adversary replay_from_file(const std::string& path) {
    return replay(load_gradient_file(path));
  }

  // Plays the +-1 gradient that maximizes immediate loss plus the game still
  // to come under the benchmark's conditional value. Ties go to +1.
  static Adversary minimax(const Benchmark& b) {
    Adversary a(AdversaryKind::minimax);
    a.benchmark_ = b;
    return a;
  }

  AdversaryKind kind() const { return kind_; }

  double next_gradient(const PlayerState& state, double play) {
    const double g = pick_gradient(state, play);
    if (!(g >= -1.0 && g <= 1.0)) {
      throw std::logic_error("Adversary: produced a gradient outside [-1, 1]");
    }
    return g;
  }

 private:
  explicit Adversary(AdversaryKind kind) : kind_(kind) {}

  double uniform01() {
    // Top 53 bits -> [0, 1); avoids std::uniform_real_distribution, whose
    // output is implementation-defined.
    return (double)(rng_() >> 11) * 0x1.0p-53;
  }

  double pick_gradient(const PlayerState& state, double play) {
    switch (kind_) {
      case AdversaryKind::rademacher_random:
        return (rng_() & 1) ? 1.0 : -1.0;
      case AdversaryKind::greedy:
        return play >= 0.0 ? 1.0 : -1.0;
      case AdversaryKind::biased_coin:
        return uniform01() < bias_ ? 1.0 : -1.0;
      case AdversaryKind::replay:
        if (cursor_ >= replay_.size()) {
          throw std::out_of_range("replay: gradient sequence exhausted");
        }
        return replay_[cursor_++];
      case AdversaryKind::minimax: {
        const int next_t = state.rounds_played + 1;
        const double up =
            play * 1.0 + conditional_value(benchmark_, next_t, state.gradient_sum + 1.0);
        const double down =
            play * -1.0 + conditional_value(benchmark_, next_t, state.gradient_sum - 1.0);
        return up >= down ? 1.0 : -1.0;
      }
    }
    throw std::logic_error("Adversary: unknown kind");
  }

  AdversaryKind kind_;
  std::mt19937_64 rng_;
  double bias_ = 0.5;
  std::vector<double> replay_;
  std::size_t cursor_ = 0;
  Benchmark benchmark_;
};

}  // namespace olo
