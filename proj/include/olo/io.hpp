#pragma once

// CSV and JSON renderings of transcripts, betting sessions, and value
// tables, plus file helpers. Doubles are printed with 17 significant
// digits so every value round-trips bit for bit; identical runs therefore
// serialize to identical bytes.

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "engine.hpp"
#include "errors.hpp"

namespace olo {

inline std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // canonicalize -0
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

namespace detail {

inline nlohmann::ordered_json benchmark_json(const Benchmark& b) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(b.kind);
  j["horizon"] = b.horizon;
  if (b.kind == GameKind::quadratic) j["sigma"] = b.sigma;
  if (b.kind == GameKind::exp_one_sided || b.kind == GameKind::exp_symmetric) {
    j["alpha"] = b.alpha;
  }
  return j;
}

}  // namespace detail

// One row per round. Width-1 games use the plain column names; wider games
// get one play and one gradient column per coordinate.
inline std::string to_csv(const Transcript& tr) {
  const int n = tr.dimension;
  std::string out;
  if (n == 1) {
    out += "round,x,g,inst_loss,cum_loss\n";
  } else {
    out += "round";
    for (int i = 0; i < n; ++i) out += ",x" + std::to_string(i);
    for (int i = 0; i < n; ++i) out += ",g" + std::to_string(i);
    out += ",inst_loss,cum_loss\n";
  }
  double cum = 0.0;
  for (size_t t = 0; t < tr.rounds.size(); ++t) {
    const TranscriptRound& r = tr.rounds[t];
    cum += r.inst_loss;
    out += std::to_string(t + 1);
    for (double x : r.play) out += "," + format_double(x);
    for (double g : r.gradient) out += "," + format_double(g);
    out += "," + format_double(r.inst_loss) + "," + format_double(cum) + "\n";
  }
  return out;
}

inline std::string to_json(const Transcript& tr) {
  nlohmann::ordered_json j;
  j["benchmark"] = detail::benchmark_json(tr.benchmark);
  j["dimension"] = tr.dimension;
  nlohmann::ordered_json rounds = nlohmann::ordered_json::array();
  double cum = 0.0;
  for (size_t t = 0; t < tr.rounds.size(); ++t) {
    const TranscriptRound& r = tr.rounds[t];
    cum += r.inst_loss;
    nlohmann::ordered_json row;
    row["round"] = t + 1;
    row["x"] = r.play;
    row["g"] = r.gradient;
    row["inst_loss"] = r.inst_loss;
    row["cum_loss"] = cum;
    rounds.push_back(std::move(row));
  }
  j["rounds"] = std::move(rounds);
  j["gradient_sums"] = tr.gradient_sums;
  j["benchmark_value"] = tr.benchmark_value;
  j["loss"] = tr.loss;
  j["reward"] = tr.reward;
  j["regret"] = tr.regret;
  return j.dump(2) + "\n";
}

inline std::string to_csv(const BettingSession& s) {
  std::string out = "round,bet,outcome,wealth\n";
  for (size_t t = 0; t < s.rounds.size(); ++t) {
    const BettingRound& r = s.rounds[t];
    out += std::to_string(t + 1) + "," + format_double(r.bet) + "," +
           format_double(r.outcome) + "," + format_double(r.wealth) + "\n";
  }
  return out;
}

inline std::string to_json(const BettingSession& s) {
  nlohmann::ordered_json j;
  j["horizon"] = s.horizon;
  j["alpha"] = s.alpha;
  j["budget"] = s.budget;
  nlohmann::ordered_json rounds = nlohmann::ordered_json::array();
  for (size_t t = 0; t < s.rounds.size(); ++t) {
    const BettingRound& r = s.rounds[t];
    nlohmann::ordered_json row;
    row["round"] = t + 1;
    row["bet"] = r.bet;
    row["outcome"] = r.outcome;
    row["wealth"] = r.wealth;
    rounds.push_back(std::move(row));
  }
  j["rounds"] = std::move(rounds);
  j["final_wealth"] = s.final_wealth;
  j["min_wealth"] = s.min_wealth;
  j["gradient_sum"] = s.gradient_sum;
  j["bets_exceeding_wealth"] = s.bets_exceeding_wealth;
  j["went_negative"] = s.went_negative;
  return j.dump(2) + "\n";
}

inline std::string to_csv(const std::vector<ValueRow>& rows) {
  std::string out = "T,exact_value,asymptote,ratio\n";
  for (const ValueRow& r : rows) {
    out += std::to_string(r.horizon) + "," + format_double(r.value.exact_value) + "," +
           format_double(r.value.asymptote) + "," + format_double(r.value.ratio) + "\n";
  }
  return out;
}

inline std::string to_json(const std::vector<ValueRow>& rows) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const ValueRow& r : rows) {
    nlohmann::ordered_json row;
    row["T"] = r.horizon;
    row["exact_value"] = r.value.exact_value;
    row["asymptote"] = r.value.asymptote;
    row["ratio"] = r.value.ratio;
    j.push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace olo
