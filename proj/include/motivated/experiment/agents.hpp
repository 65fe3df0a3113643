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

#ifndef MOTIVATED_EXPERIMENT_AGENTS_HPP_
#define MOTIVATED_EXPERIMENT_AGENTS_HPP_

// Receiver and sender behavior in the experiment simulation.
//
// Each trial is mapped to the game by a Frame: the high message is the
// direction the receiver's party is motivated to believe, and the prior is
// the receiver's probability that this direction is true. Neutral topics use
// "greater" as the high message and carry no motive.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>

#include "motivated/equilibrium.hpp"
#include "motivated/experiment/scoring.hpp"
#include "motivated/experiment/topics.hpp"
#include "motivated/game_core.hpp"
#include "motivated/rng.hpp"

namespace motivated {

inline constexpr int kPriorGridSize = 11;  // 0.0, 0.1, ..., 1.0

inline double GridPrior(int k) { return static_cast<double>(k) / 10.0; }
inline int GridIndex(double prior) {
  return static_cast<int>(std::lround(prior * 10.0));
}
inline double SnapToGrid(double x) {
  return GridPrior(GridIndex(std::clamp(x, 0.0, 1.0)));
}

enum class Alignment { kTrueAligned, kFalseAligned, kUnknown, kNeutral };

constexpr std::string_view ToString(Alignment a) {
  switch (a) {
    case Alignment::kTrueAligned: return "true_aligned";
    case Alignment::kFalseAligned: return "false_aligned";
    case Alignment::kUnknown: return "unknown";
    case Alignment::kNeutral: return "neutral";
  }
  return "";
}

// Alignment of the party's motive with the truth. Independents have no
// motive direction and map to kUnknown.
inline Alignment DeriveAlignment(const Topic& topic, Party party,
                                 bool info_revealed, Direction true_direction) {
  if (!topic.political) return Alignment::kNeutral;
  if (!info_revealed) return Alignment::kUnknown;
  const auto pro = topic.ProDirection(party);
  if (!pro) return Alignment::kUnknown;
  return *pro == true_direction ? Alignment::kTrueAligned
                                : Alignment::kFalseAligned;
}

struct Frame {
  Direction high = Direction::kGreater;
  double prior_high = 0.5;
  bool motivated = false;

  Message ToMessage(Direction d) const {
    return d == high ? Message::kHigh : Message::kLow;
  }
  double Bias(double lambda) const { return motivated ? lambda : 0.0; }
};

// Frame for a receiver of `party`, given the prior that the party's
// motivated direction ("greater" on neutral topics) is true.
inline Frame ReceiverFrame(const Topic& topic, Party party, double prior_high) {
  const auto pro = topic.ProDirection(party);
  return {pro.value_or(Direction::kGreater), prior_high, pro.has_value()};
}

// Same frame, built from the prior that the true direction is true.
inline Frame FrameFromPriorOnTrue(const Topic& topic, Party party,
                                  Direction true_direction,
                                  double prior_on_true) {
  Frame f = ReceiverFrame(topic, party, 0.0);
  f.prior_high = f.high == true_direction ? prior_on_true : 1.0 - prior_on_true;
  return f;
}

// What every agent believes about the sender population: used by receivers
// to pick the sender strategy they think they face.
struct PopulationBeliefs {
  double tau = 1.0;
  double gamma = 10.0;
  double lambda_hat_r = 0.114;
  OffPathPolicy off_path{};
};

// Most truthful pure BNE at the receiver's believed bias: separating, then
// low pooling, then high pooling. Falls back to separating if none exists
// (possible only under a custom off-path policy).
inline SenderStrategy SelectPerceivedStrategy(double prior_high,
                                              const PopulationBeliefs& pop,
                                              double lambda_hat_r) {
  const auto bne = EnumeratePureBne(prior_high, pop.tau, pop.gamma,
                                    lambda_hat_r, pop.off_path);
  for (BneKind k : {BneKind::kSeparating, BneKind::kPoolLow, BneKind::kPoolHigh}) {
    for (const auto& b : bne) {
      if (b.kind == k) return b.sender;
    }
  }
  return SenderStrategy::Truthful();
}

inline RatingFamily PerceivedFamily(const Frame& f, const PopulationBeliefs& pop) {
  return RatingFamily(SelectPerceivedStrategy(f.prior_high, pop,
                                              f.Bias(pop.lambda_hat_r)),
                      f.prior_high, pop.off_path);
}

// ---------------------------------------------------------------------------
// Receivers.

struct ReceiverAgent {
  int id = 0;
  Party party = Party::kDem;
  double bias = 0.114;
  double prior_mean = 0.587;  // pro-party state
  double prior_sd = 0.20;
  std::uint64_t stream = 0;
};

inline double StandardNormalCdf(double z) {
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

// Normal(mean, sd) truncated to [0,1], by rejection.
inline double DrawTruncatedNormal(double mean, double sd, Rng& rng) {
  if (sd == 0.0) return std::clamp(mean, 0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.Normal(mean, sd);
    if (x >= 0.0 && x <= 1.0) return x;
  }
  return std::clamp(mean, 0.0, 1.0);
}

// Distribution of a grid-snapped truncated normal draw.
inline std::array<double, kPriorGridSize> PriorGridPmf(double mean, double sd) {
  std::array<double, kPriorGridSize> pmf{};
  if (sd == 0.0) {
    pmf[GridIndex(std::clamp(mean, 0.0, 1.0))] = 1.0;
    return pmf;
  }
  auto cdf = [&](double x) { return StandardNormalCdf((x - mean) / sd); };
  const double mass = cdf(1.0) - cdf(0.0);
  for (int k = 0; k < kPriorGridSize; ++k) {
    const double lo = std::max(0.0, (k - 0.5) / 10.0);
    const double hi = std::min(1.0, (k + 0.5) / 10.0);
    pmf[k] = (cdf(hi) - cdf(lo)) / mass;
  }
  return pmf;
}

// Mean of the receiver's prior distribution on the frame's high state.
inline double FramePriorMean(const ReceiverAgent& r, const Topic& topic) {
  return topic.political ? r.prior_mean : 0.5;
}

// Grid prior that the party's motivated direction ("greater" on neutral
// topics) is true.
inline double ReceiverPriorHigh(const ReceiverAgent& r, const Topic& topic,
                                Rng& rng) {
  return SnapToGrid(DrawTruncatedNormal(FramePriorMean(r, topic), r.prior_sd, rng));
}

// Grid prior that the true direction is true.
inline double ReceiverPrior(const ReceiverAgent& r, const Topic& topic,
                            Direction true_direction, Rng& rng) {
  const double high = ReceiverPriorHigh(r, topic, rng);
  const Frame f = ReceiverFrame(topic, r.party, high);
  return f.high == true_direction ? high : SnapToGrid(1.0 - high);
}

// Rating that `msg` is true. The sender's incentive arm is deliberately
// ignored: receivers do not condition on it.
inline double RateMessage(const ReceiverAgent& r, const Frame& frame,
                          Direction msg, bool sender_incentivized,
                          const SenderStrategy& perceived,
                          const OffPathPolicy& off_path) {
  (void)sender_incentivized;
  return RatingFamily(perceived, frame.prior_high, off_path)
      .Rating(frame.ToMessage(msg), frame.Bias(r.bias));
}

// Median-belief variant: P(pro-party message true) = clamp(1/2 + bias/2),
// reported under the 100/55/0 rule. "First" is the pro-party message
// ("greater" on neutral topics).
inline PairChoice RatePairExpt2(double bias, bool political) {
  const double p = political ? std::clamp(0.5 + bias / 2.0, 0.0, 1.0) : 0.5;
  return OptimalRatingRuleReport(p);
}
inline PairChoice RatePairExpt2(const ReceiverAgent& r, const Topic& topic) {
  return RatePairExpt2(r.bias, topic.political);
}

// Sender points in the median-belief variant for a message that is (or is
// not) the receiver's "first" option.
inline double SenderPointsExpt2(PairChoice choice, bool message_is_first) {
  switch (choice) {
    case PairChoice::kEquallyLikely: return 50.0;
    case PairChoice::kFirstMoreLikely: return message_is_first ? 100.0 : 0.0;
    case PairChoice::kSecondMoreLikely: return message_is_first ? 0.0 : 100.0;
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// Senders.

struct SenderAgent {
  int id = 0;
  Party party = Party::kDem;
  bool incentivized = true;
  double honesty_weight = 1.0;   // tau
  double rating_weight = 10.0;   // gamma; 0 when unincentivized
  double belief_bias = 0.30;     // lambda_hat_s
  double expressive_weight = 0.0;
  double noise_rate = 0.05;
};

// Expected rating (or points / 100) of the true and the false message.
struct MessageValues {
  double true_msg = 0.0;
  double false_msg = 0.0;
};

// Parties the sender averages over: the known party, or an equal Dem/Rep mix.
inline std::array<std::pair<Party, double>, 2> PartyMix(
    std::optional<Party> receiver_party) {
  if (receiver_party) return {{{*receiver_party, 1.0}, {Party::kRep, 0.0}}};
  return {{{Party::kDem, 0.5}, {Party::kRep, 0.5}}};
}

// Ratings the sender expects in one frame, at her belief about the bias.
inline ReceiverStrategy SenderBelievedRatings(const SenderAgent& s,
                                              const Frame& f,
                                              const PopulationBeliefs& pop) {
  return PerceivedFamily(f, pop).At(f.Bias(s.belief_bias));
}

inline bool PrefersLie(const SenderAgent& s, const Topic& topic,
                       Direction true_direction, const MessageValues& v) {
  const auto own = topic.ProDirection(s.party);
  auto expressive = [&](Direction d) {
    return own && *own == d ? s.expressive_weight : 0.0;
  };
  const double u_true = s.honesty_weight + s.rating_weight * v.true_msg +
                        expressive(true_direction);
  const double u_false =
      s.rating_weight * v.false_msg + expressive(Opposite(true_direction));
  return u_false > u_true;
}

// With probability noise_rate the choice is replaced by a fair coin.
inline bool ApplyNoise(bool lie, double noise_rate, Rng& rng) {
  if (noise_rate > 0.0 && rng.Bernoulli(noise_rate)) return rng.Bernoulli(0.5);
  return lie;
}

inline MessageValues ValuesAtPriorOnTrue(const SenderAgent& s,
                                         const Topic& topic,
                                         Direction true_direction,
                                         std::optional<Party> receiver_party,
                                         double prior_on_true,
                                         const PopulationBeliefs& pop) {
  MessageValues v;
  for (const auto& [party, w] : PartyMix(receiver_party)) {
    if (w == 0.0) continue;
    const Frame f = FrameFromPriorOnTrue(topic, party, true_direction, prior_on_true);
    const ReceiverStrategy r = SenderBelievedRatings(s, f, pop);
    v.true_msg += w * r.Rating(f.ToMessage(true_direction));
    v.false_msg += w * r.Rating(f.ToMessage(Opposite(true_direction)));
  }
  return v;
}

// Strategy method: one choice per receiver prior-on-true 0.0, ..., 1.0.
// true = false message.
inline std::array<bool, kPriorGridSize> StrategyMethodChoices(
    const SenderAgent& s, const Topic& topic, Direction true_direction,
    std::optional<Party> receiver_party, const PopulationBeliefs& pop,
    Rng& rng) {
  std::array<bool, kPriorGridSize> lies{};
  for (int k = 0; k < kPriorGridSize; ++k) {
    const MessageValues v = ValuesAtPriorOnTrue(s, topic, true_direction,
                                                receiver_party, GridPrior(k), pop);
    lies[k] = ApplyNoise(PrefersLie(s, topic, true_direction, v), s.noise_rate, rng);
  }
  return lies;
}

// One message with the receiver's prior integrated out over the population
// prior distribution (prior_mean is for the pro-party state).
inline bool ChooseMessageBlock2(const SenderAgent& s, const Topic& topic,
                                Direction true_direction,
                                std::optional<Party> receiver_party,
                                double prior_mean, double prior_sd,
                                const PopulationBeliefs& pop, Rng& rng) {
  const auto pmf = PriorGridPmf(topic.political ? prior_mean : 0.5, prior_sd);
  MessageValues v;
  for (const auto& [party, w] : PartyMix(receiver_party)) {
    if (w == 0.0) continue;
    for (int k = 0; k < kPriorGridSize; ++k) {
      if (pmf[k] == 0.0) continue;
      const Frame f = ReceiverFrame(topic, party, GridPrior(k));
      const ReceiverStrategy r = SenderBelievedRatings(s, f, pop);
      v.true_msg += w * pmf[k] * r.Rating(f.ToMessage(true_direction));
      v.false_msg += w * pmf[k] * r.Rating(f.ToMessage(Opposite(true_direction)));
    }
  }
  return ApplyNoise(PrefersLie(s, topic, true_direction, v), s.noise_rate, rng);
}

// Points the sender expects for each message against a receiver of `party`
// in the median-belief variant, at her belief about the bias.
inline MessageValues Expt2BelievedPoints(const SenderAgent& s,
                                         const Topic& topic,
                                         Direction true_direction, Party party) {
  const Frame f = ReceiverFrame(topic, party, 0.5);
  const PairChoice c = RatePairExpt2(s.belief_bias, topic.political);
  return {SenderPointsExpt2(c, f.high == true_direction),
          SenderPointsExpt2(c, f.high != true_direction)};
}

inline bool ChooseMessageExpt2(const SenderAgent& s, const Topic& topic,
                               Direction true_direction,
                               std::optional<Party> receiver_party, Rng& rng) {
  MessageValues v;
  for (const auto& [party, w] : PartyMix(receiver_party)) {
    if (w == 0.0) continue;
    const MessageValues p = Expt2BelievedPoints(s, topic, true_direction, party);
    v.true_msg += w * p.true_msg / 100.0;
    v.false_msg += w * p.false_msg / 100.0;
  }
  return ApplyNoise(PrefersLie(s, topic, true_direction, v), s.noise_rate, rng);
}

struct InfoValue {
  double gain = 0.0;  // points
  bool purchase = false;
};

// points[p][m]: expected points of message m against a receiver of party p;
// weight_first is the probability of party 0. Buying raises the chance of
// seeing the party from 1/2 to 1, so the purchase is worth gain / 2.
inline InfoValue ValueOfPartyInfo(
    const std::array<std::array<double, 2>, 2>& points, double weight_first,
    double price) {
  const double w0 = weight_first, w1 = 1.0 - weight_first;
  const double informed = w0 * std::max(points[0][0], points[0][1]) +
                          w1 * std::max(points[1][0], points[1][1]);
  const double uninformed = std::max(w0 * points[0][0] + w1 * points[1][0],
                                     w0 * points[0][1] + w1 * points[1][1]);
  InfoValue out;
  out.gain = informed - uninformed;
  out.purchase = out.gain * (1.0 - 0.5) > price;
  return out;
}

inline InfoValue SenderValueOfPartyInfo(const SenderAgent& s,
                                        const Topic& topic,
                                        Direction true_direction,
                                        double price) {
  std::array<std::array<double, 2>, 2> pts{};
  const std::array<Party, 2> parties{Party::kDem, Party::kRep};
  for (int p = 0; p < 2; ++p) {
    const MessageValues v = Expt2BelievedPoints(s, topic, true_direction, parties[p]);
    pts[p] = {v.true_msg, v.false_msg};
  }
  return ValueOfPartyInfo(pts, 0.5, price);
}

}  // namespace motivated

#endif  // MOTIVATED_EXPERIMENT_AGENTS_HPP_
