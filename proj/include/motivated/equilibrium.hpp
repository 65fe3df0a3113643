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

#ifndef MOTIVATED_EQUILIBRIUM_HPP_
#define MOTIVATED_EQUILIBRIUM_HPP_

// Closed-form equilibria of the game and an independent brute-force
// certifier.
//
// Every existence condition has the form tau/gamma >= c or tau/gamma <= c.
// It is evaluated multiplied through by gamma, so gamma == 0 behaves like
// tau/gamma == +inf without a division, and the reported slack is in sender
// utility units:  tau - gamma*c  for ">=",  gamma*c - tau  for "<=".
// A condition holds when its slack is >= -kConditionTol.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "motivated/game_core.hpp"

namespace motivated {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Condition {
  std::string expr;
  double slack = 0.0;
  bool Holds() const { return slack >= -kConditionTol; }
};

namespace detail {

enum class Sense { kAtLeast, kAtMost };

struct Constraint {
  Sense sense;
  double threshold;  // c in tau/gamma (sense) c
  std::string label;

  double Slack(double tau, double gamma) const {
    return sense == Sense::kAtLeast ? tau - gamma * threshold
                                    : gamma * threshold - tau;
  }
  Condition Evaluate(double tau, double gamma) const {
    std::ostringstream os;
    os.precision(6);
    os << "tau/gamma " << (sense == Sense::kAtLeast ? ">= " : "<= ") << label
       << " = " << threshold;
    return {os.str(), Slack(tau, gamma)};
  }
};

inline Constraint AtLeast(double c, std::string label) {
  return {Sense::kAtLeast, c, std::move(label)};
}
inline Constraint AtMost(double c, std::string label) {
  return {Sense::kAtMost, c, std::move(label)};
}

inline double MinSlack(const std::vector<Condition>& cs) {
  double m = kInf;
  for (const auto& c : cs) m = std::min(m, c.slack);
  return m;
}

inline bool AllHold(const std::vector<Condition>& cs) {
  return std::all_of(cs.begin(), cs.end(),
                     [](const Condition& c) { return c.Holds(); });
}

}  // namespace detail

// Rating of the pooled message when every type sends the high message.
inline double PoolHighRating(double prior, double bias) {
  return std::clamp(prior + bias / 2.0, 0.0, 1.0);
}
// Rating of the pooled message when every type sends the low message.
inline double PoolLowRating(double prior, double bias) {
  return std::clamp(1.0 - prior - bias / 2.0, 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Pure-strategy BNE of the game with commonly known bias.

enum class BneKind { kSeparating, kPoolHigh, kPoolLow };
inline constexpr std::array<BneKind, 3> kBneKinds{
    BneKind::kSeparating, BneKind::kPoolHigh, BneKind::kPoolLow};

constexpr std::string_view ToString(BneKind k) {
  switch (k) {
    case BneKind::kSeparating:
      return "separating";
    case BneKind::kPoolHigh:
      return "pool_high";
    case BneKind::kPoolLow:
      return "pool_low";
  }
  return "?";
}

constexpr SenderStrategy StrategyOf(BneKind k) {
  switch (k) {
    case BneKind::kSeparating:
      return SenderStrategy::Truthful();
    case BneKind::kPoolHigh:
      return SenderStrategy::PoolHigh();
    case BneKind::kPoolLow:
      return SenderStrategy::PoolLow();
  }
  return SenderStrategy::Truthful();
}

struct PureBne {
  BneKind kind = BneKind::kSeparating;
  ReceiverStrategy receiver;
  SenderStrategy sender;
  double condition_slack = 0.0;  // minimum over `conditions`
  std::vector<Condition> conditions;
};

// No-profitable-deviation conditions of a pure profile, one per state, given
// the receiver's ratings.
inline std::vector<Condition> PureProfileConditions(
    const SenderStrategy& s, const ReceiverStrategy& r, double tau,
    double gamma) {
  std::vector<Condition> out;
  for (State state : kStates) {
    const Message sent = s.ProbMessage(state, Message::kHigh) == 1.0
                             ? Message::kHigh
                             : Message::kLow;
    const Message dev = Other(sent);
    const double gap = r.Rating(dev) - r.Rating(sent);
    const std::string diff = "a(" + std::string(ToString(dev)) + ")-a(" +
                             std::string(ToString(sent)) + ")";
    if (sent == TruthfulMessage(state)) {
      // gamma a(sent) + tau >= gamma a(dev)
      out.push_back(detail::AtLeast(gap, diff).Evaluate(tau, gamma));
    } else {
      // gamma a(sent) >= gamma a(dev) + tau
      out.push_back(detail::AtMost(-gap, "-(" + diff + ")").Evaluate(tau, gamma));
    }
  }
  return out;
}

inline PureBne EvaluatePureBne(BneKind kind, double prior, double tau,
                               double gamma, double bias,
                               const OffPathPolicy& off_path) {
  PureBne b;
  b.kind = kind;
  b.sender = StrategyOf(kind);
  b.receiver = RatingFamily(b.sender, prior, off_path).At(bias);
  b.conditions = PureProfileConditions(b.sender, b.receiver, tau, gamma);
  b.condition_slack = detail::MinSlack(b.conditions);
  return b;
}

inline std::vector<PureBne> EnumeratePureBne(double prior, double tau,
                                             double gamma, double bias,
                                             const OffPathPolicy& off_path) {
  std::vector<PureBne> out;
  for (BneKind k : kBneKinds) {
    PureBne b = EvaluatePureBne(k, prior, tau, gamma, bias, off_path);
    if (detail::AllHold(b.conditions)) out.push_back(std::move(b));
  }
  return out;
}

inline std::vector<PureBne> EnumeratePureBne(const GameParams& p) {
  return EnumeratePureBne(p.prior, p.honesty_weight, p.rating_weight,
                          p.bias_true, p.off_path);
}

// The x_H-pooling equilibrium under a custom policy needs its custom off-path rating of
// x_L strictly below prior - tau/gamma.
inline bool PoolHighOffPathAdmissible(const GameParams& p) {
  if (p.off_path.kind == OffPathPolicy::Kind::kFullPunishment) return true;
  return p.rating_weight * p.off_path.rating_msg_l <
         p.rating_weight * p.prior - p.honesty_weight;
}

// ---------------------------------------------------------------------------
// Mixed BNE of the bias-free game, as stated in closed form.

enum class MixedBneKind { kMixTruthfulLowState, kMixTruthfulHighState };

struct MixedBne {
  MixedBneKind kind = MixedBneKind::kMixTruthfulLowState;
  // Probability of the truthful message in the mixing state.
  double mix_prob = 0.0;
  SenderStrategy sender;
  ReceiverStrategy receiver;
  // u(x_H) - u(x_L) for the sender in the mixing state under `receiver`.
  double indifference_gap = 0.0;
};

inline std::vector<MixedBne> MixedBneList(double prior, double tau,
                                          double gamma, double bias = 0.0) {
  if (bias != 0.0) {
    throw std::domain_error(
        "unsupported regime: mixed BNE are only available for lambda == 0");
  }
  std::vector<MixedBne> out;
  // tau/gamma <= c  <=>  tau <= gamma*c, false for gamma == 0.
  const bool low_ok = tau <= gamma * (1.0 - prior) + kConditionTol;
  const bool high_ok = tau <= gamma * prior + kConditionTol;
  if (!low_ok && !high_ok) return out;
  const double ratio = tau / gamma;
  if (low_ok && ratio < 1.0) {
    MixedBne m;
    m.kind = MixedBneKind::kMixTruthfulLowState;
    m.mix_prob = (1.0 - prior - ratio) / ((1.0 - prior) * (1.0 - ratio));
    m.sender = {1.0, 1.0 - m.mix_prob};
    m.receiver = {1.0 - ratio, 1.0};
    m.indifference_gap =
        SenderExpectedUtility(Message::kHigh, State::kLow, m.receiver, tau,
                              gamma) -
        SenderExpectedUtility(Message::kLow, State::kLow, m.receiver, tau,
                              gamma);
    out.push_back(m);
  }
  if (high_ok && ratio < 1.0) {
    MixedBne m;
    m.kind = MixedBneKind::kMixTruthfulHighState;
    m.mix_prob = (prior - ratio) / (prior * (1.0 - ratio));
    m.sender = {m.mix_prob, 0.0};
    m.receiver = {1.0, 1.0 - ratio};
    m.indifference_gap =
        SenderExpectedUtility(Message::kHigh, State::kHigh, m.receiver, tau,
                              gamma) -
        SenderExpectedUtility(Message::kLow, State::kHigh, m.receiver, tau,
                              gamma);
    out.push_back(m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Motivated equilibria: R plays his side of the BNE at lambda_hat_r
// (realized at the true lambda); S best-responds believing lambda_hat_s.

inline constexpr int kMeRows = 6;

struct MotivatedEquilibrium {
  int row = 1;
  ReceiverStrategy receiver;         // realized, at the true bias
  SenderStrategy perceived_sender;   // what R best-responds to
  SenderStrategy actual_sender;      // S's best response at lambda_hat_s
  std::vector<Condition> conditions;

  double MinSlack() const { return detail::MinSlack(conditions); }
};

struct MeRowShape {
  SenderStrategy perceived;
  SenderStrategy actual;
};

inline MeRowShape RowShape(int row) {
  using S = SenderStrategy;
  switch (row) {
    case 1:
      return {S::Truthful(), S::Truthful()};
    case 2:
      return {S::PoolHigh(), S::PoolHigh()};
    case 3:
      return {S::PoolLow(), S::PoolLow()};
    case 4:
      return {S::Truthful(), S::PoolHigh()};
    case 5:
      return {S::PoolLow(), S::Truthful()};
    case 6:
      return {S::PoolLow(), S::PoolHigh()};
    default:
      throw std::out_of_range("motivated equilibrium rows are 1..6");
  }
}

// Row index for a (perceived, actual) pair of pure rules; 0 if no row.
inline int RowOf(const SenderStrategy& perceived, const SenderStrategy& actual) {
  for (int row = 1; row <= kMeRows; ++row) {
    const MeRowShape s = RowShape(row);
    if (s.perceived == perceived && s.actual == actual) return row;
  }
  return 0;
}

// Closed-form conditions of one row in tau/gamma space. Row 1 uses
// tau/gamma >= lambda_hat_s/2; the lambda_hat_r/2 bound it also needs is
// implied because lambda_hat_s >= lambda_hat_r.
inline std::vector<detail::Constraint> RowConstraints(const GameParams& p,
                                                      int row) {
  using detail::AtLeast;
  using detail::AtMost;
  const double lr = p.bias_hat_receiver;
  const double ls = p.bias_hat_sender;
  const double off_h = p.off_path.Rating(Message::kHigh);
  const double off_l = p.off_path.Rating(Message::kLow);
  const double pool_h_r = std::min(p.prior + lr / 2.0, 1.0);
  const double pool_l_r = std::max(1.0 - p.prior - lr / 2.0, 0.0);
  const double pool_l_s = std::max(1.0 - p.prior - ls / 2.0, 0.0);
  switch (row) {
    case 1:
      return {AtLeast(ls / 2.0, "lambda_hat_s/2")};
    case 2:
      return {AtMost(pool_h_r - off_l, "min{pi+lambda_hat_r/2,1}-a(x_L)")};
    case 3:
      return {AtMost(pool_l_s - off_h, "max{1-pi-lambda_hat_s/2,0}-a(x_H)")};
    case 4:
      return {AtLeast(lr / 2.0, "lambda_hat_r/2"),
              AtMost(ls / 2.0, "lambda_hat_s/2")};
    case 5:
      return {AtMost(pool_l_r - off_h, "max{1-pi-lambda_hat_r/2,0}-a(x_H)"),
              AtLeast(pool_l_s - off_h, "max{1-pi-lambda_hat_s/2,0}-a(x_H)"),
              AtLeast(-(pool_l_s - off_h),
                      "-(max{1-pi-lambda_hat_s/2,0}-a(x_H))")};
    case 6:
      return {AtMost(pool_l_r - off_h, "max{1-pi-lambda_hat_r/2,0}-a(x_H)"),
              AtMost(-(pool_l_s - off_h),
                     "-(max{1-pi-lambda_hat_s/2,0}-a(x_H))")};
    default:
      throw std::out_of_range("motivated equilibrium rows are 1..6");
  }
}

// Builds the row's profile and evaluates its conditions whether or not they
// hold.
inline MotivatedEquilibrium EvaluateMeRow(const GameParams& p, int row) {
  const MeRowShape shape = RowShape(row);
  MotivatedEquilibrium me;
  me.row = row;
  me.perceived_sender = shape.perceived;
  me.actual_sender = shape.actual;
  me.receiver =
      RatingFamily(shape.perceived, p.prior, p.off_path).At(p.bias_true);
  for (const auto& c : RowConstraints(p, row)) {
    me.conditions.push_back(c.Evaluate(p.honesty_weight, p.rating_weight));
  }
  return me;
}

inline std::vector<MotivatedEquilibrium> EnumerateMe(const GameParams& p) {
  std::vector<MotivatedEquilibrium> out;
  for (int row = 1; row <= kMeRows; ++row) {
    MotivatedEquilibrium me = EvaluateMeRow(p, row);
    if (detail::AllHold(me.conditions)) out.push_back(std::move(me));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force certification of a profile against the three clauses of the
// motivated-equilibrium definition. Independent of the table conditions: it
// compares utilities of every pure deviation directly and searches the
// receiver's rating on a grid.

struct ProfileCandidate {
  ReceiverStrategy receiver;
  SenderStrategy perceived_sender;
  SenderStrategy actual_sender;
};

struct VerificationReport {
  double clause_i_gain = 0.0;    // actual sender vs family at lambda_hat_s
  double clause_ii_gain = 0.0;   // realized ratings vs grid at true lambda
  double clause_iii_gain = 0.0;  // perceived sender vs family at lambda_hat_r
  double grid_step = 1e-3;
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr double kDefaultGridStep = 1e-3;

inline double VerificationTolerance(double grid_step) {
  return 1e-6 + grid_step * grid_step;
}

namespace detail {

// Largest interim gain any type of the sender could get by switching to a
// pure message.
inline double SenderDeviationGain(const SenderStrategy& s,
                                  const ReceiverStrategy& ratings, double tau,
                                  double gamma) {
  double worst = 0.0;
  for (State state : kStates) {
    double best = -kInf;
    double current = 0.0;
    for (Message m : kMessages) {
      const double u = SenderExpectedUtility(m, state, ratings, tau, gamma);
      best = std::max(best, u);
      current += s.ProbMessage(state, m) * u;
    }
    worst = std::max(worst, best - current);
  }
  return worst;
}

inline double ReceiverGridGain(const ProfileCandidate& c, double prior,
                               double bias, double grid_step) {
  const auto n = static_cast<long>(std::llround(1.0 / grid_step));
  double worst = 0.0;
  for (Message m : kMessages) {
    const auto p_truthful = BayesPosterior(prior, c.perceived_sender, m);
    if (!p_truthful) continue;  // off-path ratings are unrestricted
    const double held =
        ReceiverExpectedUtility(c.receiver.Rating(m), *p_truthful, bias, m);
    double best = -kInf;
    for (long i = 0; i <= n; ++i) {
      const double a = std::min(1.0, static_cast<double>(i) * grid_step);
      best = std::max(best, ReceiverExpectedUtility(a, *p_truthful, bias, m));
    }
    worst = std::max(worst, best - held);
  }
  return worst;
}

inline void CheckCandidate(const ProfileCandidate& c, const GameParams& p,
                           double grid_step) {
  std::vector<std::string> problems;
  if (!(grid_step > 0.0 && grid_step <= 0.01))
    problems.push_back("grid_step must lie in (0, 0.01]");
  if (!c.receiver.IsValid()) problems.push_back("receiver ratings outside [0,1]");
  if (!c.perceived_sender.IsValid())
    problems.push_back("perceived sender probabilities outside [0,1]");
  if (!c.actual_sender.IsValid())
    problems.push_back("actual sender probabilities outside [0,1]");
  if (!(p.prior >= 0.0 && p.prior <= 1.0)) problems.push_back("prior outside [0,1]");
  if (!(p.honesty_weight > 0.0)) problems.push_back("tau must be > 0");
  if (!(p.rating_weight >= 0.0)) problems.push_back("gamma must be >= 0");
  if (problems.empty()) return;
  std::string msg = "malformed candidate:";
  for (const auto& s : problems) msg += " " + s + ";";
  throw std::invalid_argument(msg);
}

}  // namespace detail

inline VerificationReport VerifyProfile(const ProfileCandidate& c,
                                        const GameParams& p,
                                        double grid_step = kDefaultGridStep) {
  detail::CheckCandidate(c, p, grid_step);
  const RatingFamily family(c.perceived_sender, p.prior, p.off_path);
  VerificationReport r;
  r.grid_step = grid_step;
  r.tolerance = VerificationTolerance(grid_step);
  r.clause_i_gain = detail::SenderDeviationGain(
      c.actual_sender, family.At(p.bias_hat_sender), p.honesty_weight,
      p.rating_weight);
  r.clause_ii_gain =
      detail::ReceiverGridGain(c, p.prior, p.bias_true, grid_step);
  r.clause_iii_gain = detail::SenderDeviationGain(
      c.perceived_sender, family.At(p.bias_hat_receiver), p.honesty_weight,
      p.rating_weight);
  r.pass = r.clause_i_gain <= r.tolerance && r.clause_ii_gain <= r.tolerance &&
           r.clause_iii_gain <= r.tolerance;
  return r;
}

inline VerificationReport VerifyProfile(const MotivatedEquilibrium& me,
                                        const GameParams& p,
                                        double grid_step = kDefaultGridStep) {
  return VerifyProfile(
      ProfileCandidate{me.receiver, me.perceived_sender, me.actual_sender}, p,
      grid_step);
}

// A BNE is a motivated equilibrium in which every belief equals the truth.
inline GameParams CommonKnowledge(GameParams p) {
  p.bias_hat_receiver = p.bias_true;
  p.bias_hat_sender = p.bias_true;
  return p;
}

inline VerificationReport VerifyProfile(const PureBne& b, const GameParams& p,
                                        double grid_step = kDefaultGridStep) {
  return VerifyProfile(ProfileCandidate{b.receiver, b.sender, b.sender},
                       CommonKnowledge(p), grid_step);
}

inline VerificationReport VerifyProfile(const MixedBne& b, const GameParams& p,
                                        double grid_step = kDefaultGridStep) {
  return VerifyProfile(ProfileCandidate{b.receiver, b.sender, b.sender},
                       CommonKnowledge(p), grid_step);
}

// ---------------------------------------------------------------------------
// Gamma regions of each row with all other parameters fixed.

struct GammaInterval {
  double lo = 0.0;
  double hi = kInf;
  bool Degenerate() const {
    return !std::isinf(hi) && hi - lo <= 1e-12 * std::max(1.0, hi);
  }
  bool Contains(double gamma) const { return gamma >= lo && gamma <= hi; }
};

// Intersection of the row's conditions with gamma_range; nullopt when empty.
inline std::optional<GammaInterval> RowGammaInterval(
    const GameParams& p, int row, GammaInterval gamma_range = {0.0, kInf}) {
  const double tau = p.honesty_weight;
  GammaInterval out = gamma_range;
  for (const auto& c : RowConstraints(p, row)) {
    if (c.sense == detail::Sense::kAtLeast) {
      if (c.threshold > 0.0) out.hi = std::min(out.hi, tau / c.threshold);
    } else {
      if (c.threshold <= 0.0) return std::nullopt;
      out.lo = std::max(out.lo, tau / c.threshold);
    }
  }
  if (out.lo > out.hi) return std::nullopt;
  return out;
}

using MeRegion = std::array<std::optional<GammaInterval>, kMeRows>;

inline MeRegion ComputeMeRegion(const GameParams& p,
                                GammaInterval gamma_range = {0.0, kInf}) {
  if (gamma_range.lo < 0.0 || gamma_range.hi < gamma_range.lo) {
    throw ConfigError("gamma range must be non-negative and ordered");
  }
  MeRegion out;
  for (int row = 1; row <= kMeRows; ++row) {
    out[row - 1] = RowGammaInterval(p, row, gamma_range);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Directional predictions of the model.

struct PredictionReport {
  // Open gamma window (2 tau/lambda_hat_s, 2 tau/lambda_hat_r).
  double window_lo = kInf;
  double window_hi = kInf;
  bool window_empty = true;
  double gamma_evaluated = 0.0;
  // Incentives create a row-4 ME with an unchanged receiver and a less
  // truthful sender.
  bool fewer_truthful_messages = false;
  // In that ME the high message is rated higher yet sent in both states.
  bool high_direction_deviation = false;
  // Without incentives the sender ignores lambda_hat_s.
  bool no_conditioning_without_incentives = false;
};

inline PredictionReport CheckPredictions(const GameParams& base) {
  PredictionReport r;
  const double tau = base.honesty_weight;
  r.window_lo = base.bias_hat_sender > 0.0 ? 2.0 * tau / base.bias_hat_sender
                                           : kInf;
  r.window_hi = base.bias_hat_receiver > 0.0
                    ? 2.0 * tau / base.bias_hat_receiver
                    : kInf;
  r.window_empty = !(r.window_lo < r.window_hi);

  if (!r.window_empty) {
    const double g = base.rating_weight;
    if (g > r.window_lo && g < r.window_hi) {
      r.gamma_evaluated = g;
    } else if (std::isinf(r.window_hi)) {
      r.gamma_evaluated = 2.0 * r.window_lo;
    } else {
      r.gamma_evaluated = 0.5 * (r.window_lo + r.window_hi);
    }
    GameParams at = base;
    at.rating_weight = r.gamma_evaluated;
    GameParams zero = base;
    zero.rating_weight = 0.0;

    const auto with = EnumerateMe(at);
    const auto without = EnumerateMe(zero);
    auto find_row = [](const std::vector<MotivatedEquilibrium>& v, int row)
        -> const MotivatedEquilibrium* {
      for (const auto& me : v)
        if (me.row == row) return &me;
      return nullptr;
    };
    const auto* lying = find_row(with, 4);
    const auto* baseline = find_row(without, 1);
    if (lying != nullptr && baseline != nullptr) {
      r.fewer_truthful_messages =
          lying->receiver == baseline->receiver &&
          lying->actual_sender.Truthfulness(base.prior) <
              baseline->actual_sender.Truthfulness(base.prior);
      r.high_direction_deviation =
          lying->receiver.rating_msg_h > lying->receiver.rating_msg_l &&
          lying->actual_sender == SenderStrategy::PoolHigh();
    }
  }

  bool invariant = true;
  for (const SenderStrategy& perceived :
       {SenderStrategy::Truthful(), SenderStrategy::PoolHigh(),
        SenderStrategy::PoolLow(), SenderStrategy::AntiTruthful()}) {
    const RatingFamily family(perceived, base.prior, base.off_path);
    for (State s : kStates) {
      const Message first = SenderBestResponse(s, family, 0.0, tau, 0.0);
      for (int i = 1; i < 20; ++i) {
        const double hat = 0.1 * i;
        invariant = invariant &&
                    SenderBestResponse(s, family, hat, tau, 0.0) == first;
      }
    }
  }
  r.no_conditioning_without_incentives = invariant;
  return r;
}

}  // namespace motivated

#endif  // MOTIVATED_EQUILIBRIUM_HPP_
