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

#ifndef MOTIVATED_GAME_CORE_HPP_
#define MOTIVATED_GAME_CORE_HPP_

// Primitives of the binary sender-receiver game with a motivated receiver.
//
// Nature draws a high or low state; the sender observes it and sends a
// high or low message; the receiver reports a rating a in [0,1] that the
// message is truthful. The receiver's motivated bias shifts ratings of the
// high ("good") message up and of the low message down by bias/2, clamped.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace motivated {

// Absolute tolerance used whenever an inequality is reported as satisfied.
inline constexpr double kConditionTol = 1e-9;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class State { kHigh, kLow };
enum class Message { kHigh, kLow };

inline constexpr std::array<State, 2> kStates{State::kHigh, State::kLow};
inline constexpr std::array<Message, 2> kMessages{Message::kHigh,
                                                  Message::kLow};

constexpr Message TruthfulMessage(State s) {
  return s == State::kHigh ? Message::kHigh : Message::kLow;
}
constexpr Message Other(Message m) {
  return m == Message::kHigh ? Message::kLow : Message::kHigh;
}
constexpr std::string_view ToString(Message m) {
  return m == Message::kHigh ? "msg_h" : "msg_l";
}
constexpr std::string_view ToString(State s) {
  return s == State::kHigh ? "high" : "low";
}

// Rating used for a message that the perceived sender never sends.
struct OffPathPolicy {
  enum class Kind { kFullPunishment, kCustom };
  Kind kind = Kind::kFullPunishment;
  double rating_msg_h = 0.0;
  double rating_msg_l = 0.0;

  static OffPathPolicy FullPunishment() { return {}; }
  static OffPathPolicy Custom(double rating_h, double rating_l) {
    if (!(rating_h >= 0.0 && rating_h <= 1.0 && rating_l >= 0.0 &&
          rating_l <= 1.0)) {
      throw ConfigError("off-path ratings must lie in [0,1]");
    }
    return {Kind::kCustom, rating_h, rating_l};
  }
  double Rating(Message m) const {
    if (kind == Kind::kFullPunishment) return 0.0;
    return m == Message::kHigh ? rating_msg_h : rating_msg_l;
  }
  friend bool operator==(const OffPathPolicy&, const OffPathPolicy&) = default;
};

struct GameParams {
  double prior = 0.587;           // P(high state)
  double honesty_weight = 1.0;    // tau > 0
  double rating_weight = 10.0;    // gamma >= 0
  double bias_true = 0.114;       // lambda in (-2, 2)
  double bias_hat_receiver = 0.114;
  double bias_hat_sender = 0.30;
  OffPathPolicy off_path{};

  // Throws ConfigError naming the first violated invariant.
  void Validate() const {
    auto fail = [](const std::string& what) { throw ConfigError(what); };
    if (!(prior >= 0.0 && prior <= 1.0)) fail("prior must lie in [0,1]");
    if (!(honesty_weight > 0.0)) fail("honesty weight tau must be > 0");
    if (!(rating_weight >= 0.0) || std::isinf(rating_weight))
      fail("rating weight gamma must be >= 0 and finite");
    if (!(bias_true > -2.0 && bias_true < 2.0))
      fail("bias lambda must lie in (-2,2)");
    if (!(bias_hat_receiver >= 0.0 && bias_hat_receiver < 2.0))
      fail("lambda_hat_r must lie in [0,2)");
    if (!(bias_hat_sender >= 0.0 && bias_hat_sender < 2.0))
      fail("lambda_hat_s must lie in [0,2)");
    if (bias_hat_sender < bias_hat_receiver)
      fail("lambda_hat_s must be >= lambda_hat_r");
  }
  friend bool operator==(const GameParams&, const GameParams&) = default;
};

// Point-belief hierarchy closed by projection: every order k >= 2 belief of
// either player equals the receiver's first-order belief.
struct BeliefHierarchy {
  enum class Player { kSender, kReceiver };
  double order_1_sender = 0.0;
  double order_1_receiver = 0.0;

  double At(Player who, int order) const {
    if (order < 1) throw std::out_of_range("belief order starts at 1");
    if (order >= 2) return order_1_receiver;
    return who == Player::kSender ? order_1_sender : order_1_receiver;
  }
  static BeliefHierarchy From(const GameParams& p) {
    return {p.bias_hat_sender, p.bias_hat_receiver};
  }
};

// Possibly mixed sender strategy: probability of the high message per state.
struct SenderStrategy {
  double prob_msg_h_given_high = 1.0;
  double prob_msg_h_given_low = 0.0;

  static constexpr SenderStrategy Truthful() { return {1.0, 0.0}; }
  static constexpr SenderStrategy PoolHigh() { return {1.0, 1.0}; }
  static constexpr SenderStrategy PoolLow() { return {0.0, 0.0}; }
  static constexpr SenderStrategy AntiTruthful() { return {0.0, 1.0}; }

  double ProbMessage(State s, Message m) const {
    const double h =
        s == State::kHigh ? prob_msg_h_given_high : prob_msg_h_given_low;
    return m == Message::kHigh ? h : 1.0 - h;
  }
  bool IsPure() const {
    auto pure = [](double x) { return x == 0.0 || x == 1.0; };
    return pure(prob_msg_h_given_high) && pure(prob_msg_h_given_low);
  }
  bool IsValid() const {
    auto prob = [](double x) { return x >= 0.0 && x <= 1.0; };
    return prob(prob_msg_h_given_high) && prob(prob_msg_h_given_low);
  }
  // Probability that the sent message matches the state.
  double Truthfulness(double prior) const {
    return prior * prob_msg_h_given_high +
           (1.0 - prior) * (1.0 - prob_msg_h_given_low);
  }
  friend bool operator==(const SenderStrategy&,
                         const SenderStrategy&) = default;
};

inline std::string ToString(const SenderStrategy& s) {
  if (s == SenderStrategy::Truthful()) return "separating";
  if (s == SenderStrategy::PoolHigh()) return "pool_high";
  if (s == SenderStrategy::PoolLow()) return "pool_low";
  if (s == SenderStrategy::AntiTruthful()) return "anti_separating";
  return "mixed";
}

struct ReceiverStrategy {
  double rating_msg_h = 1.0;
  double rating_msg_l = 1.0;

  double Rating(Message m) const {
    return m == Message::kHigh ? rating_msg_h : rating_msg_l;
  }
  bool IsValid() const {
    return rating_msg_h >= 0.0 && rating_msg_h <= 1.0 && rating_msg_l >= 0.0 &&
           rating_msg_l <= 1.0;
  }
  friend bool operator==(const ReceiverStrategy&,
                         const ReceiverStrategy&) = default;
};

// P(message is truthful | message). nullopt when the message has zero
// probability under (prior, strategy), i.e. it is off-path.
inline std::optional<double> BayesPosterior(double prior,
                                            const SenderStrategy& strategy,
                                            Message msg) {
  const double from_high = prior * strategy.ProbMessage(State::kHigh, msg);
  const double from_low = (1.0 - prior) * strategy.ProbMessage(State::kLow, msg);
  const double total = from_high + from_low;
  if (!(total > 0.0)) return std::nullopt;
  return (msg == Message::kHigh ? from_high : from_low) / total;
}

// Motivated rating of an on-path message: the posterior shifted by bias/2
// toward the high message. For bias >= 0 only the upper (high message) or
// lower (low message) bound can bind; negative bias is clamped to [0,1] too.
inline double ShiftedRating(double posterior, double bias, Message msg) {
  const double shifted =
      msg == Message::kHigh ? posterior + bias / 2.0 : posterior - bias / 2.0;
  return std::clamp(shifted, 0.0, 1.0);
}

inline std::optional<double> MotivatedRating(double prior,
                                             const SenderStrategy& strategy,
                                             double bias, Message msg) {
  const auto posterior = BayesPosterior(prior, strategy, msg);
  if (!posterior) return std::nullopt;
  return ShiftedRating(*posterior, bias, msg);
}

inline double ReceiverExpectedUtility(double rating, double p_truthful,
                                      double bias, Message msg) {
  const double accuracy = p_truthful * (1.0 - (1.0 - rating) * (1.0 - rating)) +
                          (1.0 - p_truthful) * (1.0 - rating * rating);
  const double motive =
      msg == Message::kHigh ? bias * rating : bias * (1.0 - rating);
  return accuracy + motive;
}

inline double SenderExpectedUtility(Message msg, State state,
                                    const ReceiverStrategy& expected_ratings,
                                    double honesty_weight,
                                    double rating_weight) {
  const double truth = msg == TruthfulMessage(state) ? honesty_weight : 0.0;
  return rating_weight * expected_ratings.Rating(msg) + truth;
}

// Receiver ratings as a function of message and bias, given the sender
// strategy the receiver believes he is facing. Realized play evaluates it at
// the true bias, the actual sender at her belief, and the perceived sender at
// the receiver's belief.
class RatingFamily {
 public:
  RatingFamily(SenderStrategy perceived_sender, double prior,
               OffPathPolicy off_path = {})
      : perceived_(perceived_sender), prior_(prior), off_path_(off_path) {}

  double Rating(Message msg, double bias) const {
    const auto on_path = MotivatedRating(prior_, perceived_, bias, msg);
    return on_path ? *on_path : off_path_.Rating(msg);
  }
  ReceiverStrategy At(double bias) const {
    return {Rating(Message::kHigh, bias), Rating(Message::kLow, bias)};
  }
  bool OnPath(Message msg) const {
    return BayesPosterior(prior_, perceived_, msg).has_value();
  }

  const SenderStrategy& perceived_sender() const { return perceived_; }
  double prior() const { return prior_; }
  const OffPathPolicy& off_path() const { return off_path_; }

 private:
  SenderStrategy perceived_;
  double prior_;
  OffPathPolicy off_path_;
};

// Ties go to the truthful message.
inline Message SenderBestResponse(State state, const RatingFamily& family,
                                  double bias_eval, double honesty_weight,
                                  double rating_weight) {
  const ReceiverStrategy ratings = family.At(bias_eval);
  const Message truthful = TruthfulMessage(state);
  const Message lie = Other(truthful);
  const double u_truth = SenderExpectedUtility(truthful, state, ratings,
                                               honesty_weight, rating_weight);
  const double u_lie =
      SenderExpectedUtility(lie, state, ratings, honesty_weight, rating_weight);
  return u_lie > u_truth ? lie : truthful;
}

}  // namespace motivated

#endif  // MOTIVATED_GAME_CORE_HPP_
