// Copyright 2026 The Motivated Equilibrium Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOTIVATED_EXPERIMENT_SIMULATION_HPP_
#define MOTIVATED_EXPERIMENT_SIMULATION_HPP_

// Simulated experiment sessions.
//
// Modes:
//   block1  strategy method, 11 choices per trial indexed by the receiver's
//           prior that the true message is true (0.0 ... 1.0)
//   block2  one choice per trial, receiver prior integrated out
//   expt2   median-belief variant: one choice per trial scored by the
//           100/55/0 rule, plus demand-for-information rounds
//
// Trial CSV columns, in order:
//   mode,round_kind,trial,sender_id,sender_party,incentivized,receiver_id,
//   receiver_party,topic_id,political,target,true_direction,info_revealed,
//   alignment,sender_alignment,receiver_prior,choices,message,realized_false,
//   rating_true_msg,rating_false_msg,realized_rating,receiver_choice,
//   sender_points,receiver_points,info_gain,purchased
// `choices` holds one 0/1 flag per choice (1 = false message). Cells that do
// not apply to a mode are empty. Reals use shortest round-trip decimals.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "motivated/experiment/agents.hpp"
#include "motivated/experiment/scoring.hpp"
#include "motivated/experiment/topics.hpp"
#include "motivated/format.hpp"
#include "motivated/game_core.hpp"
#include "motivated/rng.hpp"

namespace motivated {

enum class SimMode { kBlock1, kBlock2, kExpt2 };

constexpr std::string_view ToString(SimMode m) {
  switch (m) {
    case SimMode::kBlock1: return "block1";
    case SimMode::kBlock2: return "block2";
    case SimMode::kExpt2: return "expt2";
  }
  return "";
}

inline std::optional<SimMode> ParseSimMode(std::string_view s) {
  if (s == "block1") return SimMode::kBlock1;
  if (s == "block2") return SimMode::kBlock2;
  if (s == "expt2") return SimMode::kExpt2;
  return std::nullopt;
}

enum class RoundKind { kMessage, kDemand };

constexpr std::string_view ToString(RoundKind k) {
  return k == RoundKind::kMessage ? "message" : "demand";
}

struct SimConfig {
  SimMode mode = SimMode::kBlock1;
  // tau and gamma are population values; lambda is the receivers' mean bias.
  // prior is unused by the simulation.
  GameParams game{};
  int n_senders = 200;
  int n_receivers = 200;
  int n_political_topics = 7;
  int n_neutral_topics = 2;
  double tau_log_sd = 0.5;       // sender tau = tau * exp(N(0, sd))
  double lambda_sd = 0.0;        // receiver bias spread
  double lambda_hat_s_sd = 0.10; // sender belief spread
  double prior_mean = 0.587;     // receiver prior on the pro-party state
  double prior_sd = 0.20;
  double epsilon = 0.05;         // choice noise
  double delta = 0.0;            // expressive weight on own-party messages
  double p_incentivized = 0.5;
  double p_info_revealed = 2.0 / 3.0;
  double info_price = 1.0;       // points
  int demand_rounds = 4;         // expt2 only
  // Flip every agent's party. Combined with flipping every topic's pro-party
  // direction this must leave all behavior unchanged.
  bool mirror_parties = false;
  std::vector<Topic> topics;     // empty: built-in fixture

  // Throws ConfigError listing every invalid field.
  void Validate() const;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;

  const std::vector<Topic>& TopicPool() const {
    return topics.empty() ? BuiltinTopics() : topics;
  }
  std::vector<Topic> SessionTopics() const {
    return SelectTopics(TopicPool(),
                        mode == SimMode::kExpt2 ? TopicSet::kMedian
                                                : TopicSet::kPrimary,
                        n_political_topics, n_neutral_topics);
  }
  PopulationBeliefs Population() const {
    return {game.honesty_weight, game.rating_weight, game.bias_hat_receiver,
            game.off_path};
  }
};

inline void SimConfig::Validate() const {
  std::vector<std::string> errs;
  try {
    game.Validate();
  } catch (const ConfigError& e) {
    errs.emplace_back(e.what());
  }
  auto need = [&](bool ok, const char* msg) {
    if (!ok) errs.emplace_back(msg);
  };
  auto prob = [](double x) { return x >= 0.0 && x <= 1.0; };
  need(n_senders >= 0, "n_senders must be >= 0");
  need(n_receivers >= 1, "n_receivers must be >= 1");
  need(n_political_topics >= 0, "n_political_topics must be >= 0");
  need(n_neutral_topics >= 0, "n_neutral_topics must be >= 0");
  need(n_political_topics + n_neutral_topics >= 1,
       "at least one topic is required");
  need(tau_log_sd >= 0.0 && std::isfinite(tau_log_sd), "tau_log_sd must be >= 0");
  need(lambda_sd >= 0.0 && std::isfinite(lambda_sd), "lambda_sd must be >= 0");
  need(lambda_hat_s_sd >= 0.0 && std::isfinite(lambda_hat_s_sd),
       "lambda_hat_s_sd must be >= 0");
  need(prob(prior_mean), "prior_mean must lie in [0,1]");
  need(prior_sd >= 0.0 && std::isfinite(prior_sd), "prior_sd must be >= 0");
  need(prob(epsilon), "epsilon must lie in [0,1]");
  need(delta >= 0.0 && std::isfinite(delta), "delta must be >= 0");
  need(prob(p_incentivized), "p_incentivized must lie in [0,1]");
  need(prob(p_info_revealed), "p_info_revealed must lie in [0,1]");
  need(info_price >= 0.0 && std::isfinite(info_price), "info_price must be >= 0");
  need(demand_rounds >= 0, "demand_rounds must be >= 0");
  if (errs.empty()) {
    try {
      const auto t = SessionTopics();
      if (mode == SimMode::kExpt2 &&
          demand_rounds > static_cast<int>(t.size())) {
        errs.emplace_back("demand_rounds exceeds the number of session topics");
      }
    } catch (const ConfigError& e) {
      errs.emplace_back(e.what());
    }
  }
  if (!errs.empty()) {
    std::string msg = "invalid simulation config:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw ConfigError(msg);
  }
}

struct TrialRecord {
  SimMode mode = SimMode::kBlock1;
  RoundKind round_kind = RoundKind::kMessage;
  std::uint64_t trial = 0;
  int sender_id = 0;
  Party sender_party = Party::kDem;
  bool incentivized = false;
  int receiver_id = 0;
  Party receiver_party = Party::kDem;
  std::string topic_id;
  bool political = false;
  double target = 0.0;  // target number, or the median in expt2
  Direction true_direction = Direction::kGreater;
  bool info_revealed = false;
  Alignment alignment = Alignment::kNeutral;
  Alignment sender_alignment = Alignment::kNeutral;
  std::optional<double> receiver_prior;  // prior on true; block modes
  std::vector<bool> choices;             // true = false message
  Direction message = Direction::kGreater;
  bool realized_false = false;
  std::optional<double> rating_true_msg;   // block modes
  std::optional<double> rating_false_msg;  // block modes
  std::optional<double> realized_rating;   // block modes
  std::optional<PairChoice> receiver_choice;  // expt2
  double sender_points = 0.0;
  double receiver_points = 0.0;
  std::optional<double> info_gain;  // demand rounds
  std::optional<bool> purchased;    // demand rounds

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

namespace detail {

inline Party MaybeMirror(Party p, bool mirror) {
  if (!mirror || p == Party::kIndependentHalf) return p;
  return p == Party::kDem ? Party::kRep : Party::kDem;
}

inline Alignment SenderAlignment(const Topic& topic, Party party,
                                 Direction true_direction) {
  return DeriveAlignment(topic, party, true, true_direction);
}

}  // namespace detail

inline SenderAgent MakeSender(const SimConfig& c, std::uint64_t seed, int j) {
  Rng rng(seed, StreamTag::kSender, static_cast<std::uint64_t>(j));
  SenderAgent s;
  s.id = j;
  s.party = detail::MaybeMirror(j % 2 == 0 ? Party::kDem : Party::kRep,
                                c.mirror_parties);
  s.incentivized = rng.Bernoulli(c.p_incentivized);
  s.honesty_weight = c.game.honesty_weight * std::exp(rng.Normal(0.0, c.tau_log_sd));
  s.rating_weight = s.incentivized ? c.game.rating_weight : 0.0;
  s.belief_bias = std::clamp(rng.Normal(c.game.bias_hat_sender, c.lambda_hat_s_sd),
                             0.0, 1.99);
  s.expressive_weight = c.delta;
  s.noise_rate = c.epsilon;
  return s;
}

inline ReceiverAgent MakeReceiver(const SimConfig& c, std::uint64_t seed, int i) {
  Rng rng(seed, StreamTag::kReceiver, static_cast<std::uint64_t>(i));
  ReceiverAgent r;
  r.id = i;
  r.party = detail::MaybeMirror(i % 2 == 0 ? Party::kDem : Party::kRep,
                                c.mirror_parties);
  r.bias = std::clamp(rng.Normal(c.game.bias_true, c.lambda_sd), -1.99, 1.99);
  r.prior_mean = c.prior_mean;
  r.prior_sd = c.prior_sd;
  r.stream = static_cast<std::uint64_t>(i);
  return r;
}

namespace detail {

// Grid prior of receiver r on the frame's high state for topic k. Fixed per
// (receiver, topic) so a receiver answers each question once.
inline double ReceiverTopicPrior(const ReceiverAgent& r, const Topic& topic,
                                 std::size_t topic_index, std::size_t n_topics,
                                 std::uint64_t seed) {
  Rng rng(seed, StreamTag::kReceiverPrior, r.stream * n_topics + topic_index);
  return ReceiverPriorHigh(r, topic, rng);
}

struct Session {
  const SimConfig& config;
  std::uint64_t seed;
  std::vector<Topic> topics;
  std::vector<ReceiverAgent> receivers;
  PopulationBeliefs pop;
  std::uint64_t next_trial = 0;
};

inline TrialRecord BlockTrial(Session& ss, const SenderAgent& s,
                              std::size_t k) {
  const SimConfig& c = ss.config;
  const Topic& topic = ss.topics[k];
  Rng rng(ss.seed, StreamTag::kTrial,
          static_cast<std::uint64_t>(s.id) * ss.topics.size() + k);

  TrialRecord rec;
  rec.mode = c.mode;
  rec.round_kind = RoundKind::kMessage;
  rec.trial = ss.next_trial++;
  rec.sender_id = s.id;
  rec.sender_party = s.party;
  rec.incentivized = s.incentivized;
  rec.topic_id = topic.id;
  rec.political = topic.political;
  rec.target = topic.targets[rng.Index(topic.targets.size())];
  rec.true_direction = topic.TrueDirection(rec.target);
  const ReceiverAgent& r = ss.receivers[rng.Index(ss.receivers.size())];
  rec.receiver_id = r.id;
  rec.receiver_party = r.party;
  rec.info_revealed = rng.Bernoulli(c.p_info_revealed);
  rec.alignment = DeriveAlignment(topic, r.party, rec.info_revealed, rec.true_direction);
  rec.sender_alignment = SenderAlignment(topic, s.party, rec.true_direction);
  const std::optional<Party> known =
      rec.info_revealed ? std::optional<Party>(r.party) : std::nullopt;

  const Frame frame = ReceiverFrame(
      topic, r.party, ReceiverTopicPrior(r, topic, k, ss.topics.size(), ss.seed));
  const double prior_on_true = frame.high == rec.true_direction
                                   ? frame.prior_high
                                   : SnapToGrid(1.0 - frame.prior_high);
  rec.receiver_prior = prior_on_true;

  if (c.mode == SimMode::kBlock1) {
    const auto lies = StrategyMethodChoices(s, topic, rec.true_direction, known,
                                            ss.pop, rng);
    rec.choices.assign(lies.begin(), lies.end());
    rec.realized_false = lies[GridIndex(prior_on_true)];
  } else {
    rec.realized_false = ChooseMessageBlock2(s, topic, rec.true_direction, known,
                                             c.prior_mean, c.prior_sd, ss.pop, rng);
    rec.choices = {rec.realized_false};
  }
  rec.message = rec.realized_false ? Opposite(rec.true_direction) : rec.true_direction;

  const SenderStrategy perceived = SelectPerceivedStrategy(
      frame.prior_high, ss.pop, frame.Bias(ss.pop.lambda_hat_r));
  rec.rating_true_msg = RateMessage(r, frame, rec.true_direction, s.incentivized,
                                    perceived, ss.pop.off_path);
  rec.rating_false_msg = RateMessage(r, frame, Opposite(rec.true_direction),
                                     s.incentivized, perceived, ss.pop.off_path);
  rec.realized_rating = rec.realized_false ? rec.rating_false_msg : rec.rating_true_msg;
  rec.receiver_points = ScoreQuadratic(*rec.realized_rating, !rec.realized_false);
  rec.sender_points = s.incentivized ? 100.0 * *rec.realized_rating : 0.0;
  return rec;
}

inline void FillExpt2Outcome(TrialRecord& rec, const Topic& topic,
                             const ReceiverAgent& r, bool sender_paid) {
  rec.message = rec.realized_false ? Opposite(rec.true_direction) : rec.true_direction;
  const Frame frame = ReceiverFrame(topic, r.party, 0.5);
  const PairChoice choice = RatePairExpt2(r, topic);
  rec.receiver_choice = choice;
  rec.sender_points =
      sender_paid ? SenderPointsExpt2(choice, rec.message == frame.high) : 0.0;
  rec.receiver_points = ScoreRatingRule(choice, frame.high == rec.true_direction);
}

inline TrialRecord Expt2Trial(Session& ss, const SenderAgent& s, std::size_t k,
                              Rng& rng, RoundKind kind) {
  const SimConfig& c = ss.config;
  const Topic& topic = ss.topics[k];
  TrialRecord rec;
  rec.mode = c.mode;
  rec.round_kind = kind;
  rec.trial = ss.next_trial++;
  rec.sender_id = s.id;
  rec.sender_party = s.party;
  rec.incentivized = s.incentivized;
  rec.topic_id = topic.id;
  rec.political = topic.political;
  rec.target = topic.targets.front();
  rec.true_direction = topic.TrueDirection(rec.target);
  const ReceiverAgent& r = ss.receivers[rng.Index(ss.receivers.size())];
  rec.receiver_id = r.id;
  rec.receiver_party = r.party;
  if (kind == RoundKind::kDemand) {
    const InfoValue v =
        SenderValueOfPartyInfo(s, topic, rec.true_direction, c.info_price);
    rec.info_gain = v.gain;
    rec.purchased = v.purchase;
    // Without purchase the party is still shown half of the time.
    rec.info_revealed = v.purchase || rng.Bernoulli(0.5);
  } else {
    rec.info_revealed = rng.Bernoulli(c.p_info_revealed);
  }
  rec.alignment = DeriveAlignment(topic, r.party, rec.info_revealed, rec.true_direction);
  rec.sender_alignment = SenderAlignment(topic, s.party, rec.true_direction);
  const std::optional<Party> known =
      rec.info_revealed ? std::optional<Party>(r.party) : std::nullopt;
  rec.realized_false = ChooseMessageExpt2(s, topic, rec.true_direction, known, rng);
  rec.choices = {rec.realized_false};
  FillExpt2Outcome(rec, topic, r, s.incentivized);
  return rec;
}

}  // namespace detail

// Deterministic in (config, seed). Senders are emitted in id order; within a
// sender, message rounds in topic order, then demand rounds.
inline std::vector<TrialRecord> RunExperiment(const SimConfig& config,
                                              std::uint64_t seed) {
  config.Validate();
  detail::Session ss{config, seed, config.SessionTopics(), {}, config.Population()};
  for (int i = 0; i < config.n_receivers; ++i) {
    ss.receivers.push_back(MakeReceiver(config, seed, i));
  }
  std::vector<TrialRecord> out;
  for (int j = 0; j < config.n_senders; ++j) {
    const SenderAgent s = MakeSender(config, seed, j);
    for (std::size_t k = 0; k < ss.topics.size(); ++k) {
      if (config.mode == SimMode::kExpt2) {
        Rng rng(seed, StreamTag::kTrial,
                static_cast<std::uint64_t>(j) * ss.topics.size() + k);
        out.push_back(detail::Expt2Trial(ss, s, k, rng, RoundKind::kMessage));
      } else {
        out.push_back(detail::BlockTrial(ss, s, k));
      }
    }
    if (config.mode == SimMode::kExpt2 && config.demand_rounds > 0) {
      // Everyone is paid for ratings in these rounds.
      SenderAgent paid = s;
      paid.incentivized = true;
      paid.rating_weight = config.game.rating_weight;
      Rng rng(seed, StreamTag::kDemand, static_cast<std::uint64_t>(j));
      std::vector<std::size_t> order(ss.topics.size());
      for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
      for (std::size_t k = order.size(); k > 1; --k) {
        std::swap(order[k - 1], order[rng.Index(k)]);
      }
      for (int d = 0; d < config.demand_rounds; ++d) {
        out.push_back(detail::Expt2Trial(ss, paid, order[d], rng, RoundKind::kDemand));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV.

inline constexpr std::array<std::string_view, 27> kTrialColumns{
    "mode",            "round_kind",      "trial",
    "sender_id",       "sender_party",    "incentivized",
    "receiver_id",     "receiver_party",  "topic_id",
    "political",       "target",          "true_direction",
    "info_revealed",   "alignment",       "sender_alignment",
    "receiver_prior",  "choices",         "message",
    "realized_false",  "rating_true_msg", "rating_false_msg",
    "realized_rating", "receiver_choice", "sender_points",
    "receiver_points", "info_gain",       "purchased"};

namespace detail {

inline std::string Opt(const std::optional<double>& v) {
  return v ? FormatDouble(*v) : std::string();
}
inline const char* Flag(bool b) { return b ? "1" : "0"; }

}  // namespace detail

inline void WriteTrialCsvHeader(std::ostream& os) {
  for (std::size_t i = 0; i < kTrialColumns.size(); ++i) {
    os << (i ? "," : "") << kTrialColumns[i];
  }
  os << '\n';
}

inline void WriteTrialCsvRow(std::ostream& os, const TrialRecord& r) {
  std::string choices;
  for (bool b : r.choices) choices += b ? '1' : '0';
  os << ToString(r.mode) << ',' << ToString(r.round_kind) << ',' << r.trial
     << ',' << r.sender_id << ',' << ToString(r.sender_party) << ','
     << detail::Flag(r.incentivized) << ',' << r.receiver_id << ','
     << ToString(r.receiver_party) << ',' << r.topic_id << ','
     << detail::Flag(r.political) << ',' << FormatDouble(r.target) << ','
     << ToString(r.true_direction) << ',' << detail::Flag(r.info_revealed)
     << ',' << ToString(r.alignment) << ',' << ToString(r.sender_alignment)
     << ',' << detail::Opt(r.receiver_prior) << ',' << choices << ','
     << ToString(r.message) << ',' << detail::Flag(r.realized_false) << ','
     << detail::Opt(r.rating_true_msg) << ','
     << detail::Opt(r.rating_false_msg) << ','
     << detail::Opt(r.realized_rating) << ','
     << (r.receiver_choice ? ToString(*r.receiver_choice) : "") << ','
     << FormatDouble(r.sender_points) << ',' << FormatDouble(r.receiver_points)
     << ',' << detail::Opt(r.info_gain) << ','
     << (r.purchased ? detail::Flag(*r.purchased) : "") << '\n';
}

inline void WriteTrialCsv(std::ostream& os,
                          const std::vector<TrialRecord>& records) {
  WriteTrialCsvHeader(os);
  for (const auto& r : records) WriteTrialCsvRow(os, r);
}

// Inverse of WriteTrialCsv. Throws ConfigError naming the line and column.
inline std::vector<TrialRecord> ReadTrialCsv(std::istream& is) {
  std::string line;
  int line_no = 1;
  if (!std::getline(is, line)) throw ConfigError("trial csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    std::string expected;
    for (std::size_t i = 0; i < kTrialColumns.size(); ++i) {
      expected += (i ? "," : "") + std::string(kTrialColumns[i]);
    }
    if (line != expected) throw ConfigError("trial csv: unexpected header");
  }
  std::vector<TrialRecord> out;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    {
      std::string cell;
      std::istringstream ls(line);
      while (std::getline(ls, cell, ',')) f.push_back(cell);
      if (line.back() == ',') f.emplace_back();
    }
    std::size_t col = 0;
    auto fail = [&](const std::string& what) -> void {
      throw ConfigError("trial csv line " + std::to_string(line_no) + ", column " +
                        std::string(kTrialColumns[col]) + ": " + what);
    };
    if (f.size() != kTrialColumns.size()) {
      throw ConfigError("trial csv line " + std::to_string(line_no) +
                        ": expected " + std::to_string(kTrialColumns.size()) +
                        " fields");
    }
    auto num = [&](std::size_t c) {
      col = c;
      const auto v = ParseDouble(f[c]);
      if (!v) fail("bad number '" + f[c] + "'");
      return *v;
    };
    auto opt_num = [&](std::size_t c) -> std::optional<double> {
      if (f[c].empty()) return std::nullopt;
      return num(c);
    };
    auto flag = [&](std::size_t c) {
      col = c;
      if (f[c] != "0" && f[c] != "1") fail("expected 0 or 1");
      return f[c] == "1";
    };
    auto party = [&](std::size_t c) {
      col = c;
      for (Party p : {Party::kDem, Party::kRep, Party::kIndependentHalf}) {
        if (f[c] == ToString(p)) return p;
      }
      fail("bad party");
      return Party::kDem;
    };
    auto align = [&](std::size_t c) {
      col = c;
      for (Alignment a : {Alignment::kTrueAligned, Alignment::kFalseAligned,
                          Alignment::kUnknown, Alignment::kNeutral}) {
        if (f[c] == ToString(a)) return a;
      }
      fail("bad alignment");
      return Alignment::kNeutral;
    };
    auto dir = [&](std::size_t c) {
      col = c;
      const auto d = ParseDirection(f[c]);
      if (!d) fail("bad direction");
      return *d;
    };
    auto integer = [&](std::size_t c) {
      const double v = num(c);
      if (v != std::floor(v) || v < 0) fail("expected a non-negative integer");
      return v;
    };

    TrialRecord r;
    col = 0;
    const auto mode = ParseSimMode(f[0]);
    if (!mode) fail("bad mode");
    r.mode = *mode;
    col = 1;
    if (f[1] == "message") {
      r.round_kind = RoundKind::kMessage;
    } else if (f[1] == "demand") {
      r.round_kind = RoundKind::kDemand;
    } else {
      fail("bad round kind");
    }
    r.trial = static_cast<std::uint64_t>(integer(2));
    r.sender_id = static_cast<int>(integer(3));
    r.sender_party = party(4);
    r.incentivized = flag(5);
    r.receiver_id = static_cast<int>(integer(6));
    r.receiver_party = party(7);
    r.topic_id = f[8];
    r.political = flag(9);
    r.target = num(10);
    r.true_direction = dir(11);
    r.info_revealed = flag(12);
    r.alignment = align(13);
    r.sender_alignment = align(14);
    r.receiver_prior = opt_num(15);
    col = 16;
    for (char ch : f[16]) {
      if (ch != '0' && ch != '1') fail("choices must be 0/1 flags");
      r.choices.push_back(ch == '1');
    }
    r.message = dir(17);
    r.realized_false = flag(18);
    r.rating_true_msg = opt_num(19);
    r.rating_false_msg = opt_num(20);
    r.realized_rating = opt_num(21);
    col = 22;
    if (!f[22].empty()) {
      bool found = false;
      for (PairChoice c : {PairChoice::kFirstMoreLikely, PairChoice::kSecondMoreLikely,
                           PairChoice::kEquallyLikely}) {
        if (f[22] == ToString(c)) {
          r.receiver_choice = c;
          found = true;
        }
      }
      if (!found) fail("bad receiver choice");
    }
    r.sender_points = num(23);
    r.receiver_points = num(24);
    r.info_gain = opt_num(25);
    if (!f[26].empty()) r.purchased = flag(26);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace motivated

#endif  // MOTIVATED_EXPERIMENT_SIMULATION_HPP_
