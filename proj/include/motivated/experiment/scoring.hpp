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

#ifndef MOTIVATED_EXPERIMENT_SCORING_HPP_
#define MOTIVATED_EXPERIMENT_SCORING_HPP_

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace motivated {

// Quadratic rule for a probability report r that a statement is true.
inline double ScoreQuadratic(double report, bool outcome) {
  if (!(report >= 0.0 && report <= 1.0)) {
    throw std::invalid_argument("quadratic score: report must lie in [0,1]");
  }
  const double miss = outcome ? 1.0 - report : report;
  return 100.0 * (1.0 - miss * miss);
}

inline double ExpectedQuadraticScore(double report, double belief) {
  return belief * ScoreQuadratic(report, true) +
         (1.0 - belief) * ScoreQuadratic(report, false);
}

inline double ScoreLinear(double guess, double answer) {
  return std::max(100.0 - std::abs(guess - answer), 0.0);
}

// Three-option rating of a message pair. "First" is the pro-party message
// when the receiver has a party motive.
enum class PairChoice { kFirstMoreLikely, kSecondMoreLikely, kEquallyLikely };

constexpr std::string_view ToString(PairChoice c) {
  switch (c) {
    case PairChoice::kFirstMoreLikely: return "first_more_likely";
    case PairChoice::kSecondMoreLikely: return "second_more_likely";
    case PairChoice::kEquallyLikely: return "equally_likely";
  }
  return "";
}

inline constexpr double kRatingRuleCorrect = 100.0;
inline constexpr double kRatingRuleEqual = 55.0;

inline double ScoreRatingRule(PairChoice choice, bool first_is_true) {
  switch (choice) {
    case PairChoice::kEquallyLikely: return kRatingRuleEqual;
    case PairChoice::kFirstMoreLikely: return first_is_true ? kRatingRuleCorrect : 0.0;
    case PairChoice::kSecondMoreLikely: return first_is_true ? 0.0 : kRatingRuleCorrect;
  }
  return 0.0;
}

// Expected-points maximizer given P(first true). Reporting "first" pays
// 100P against 55 for "equal", so the switch points are 55/100 and 45/100;
// ties resolve to kEquallyLikely. Thresholds are compared on P directly so
// they hold exactly in floating point.
inline PairChoice OptimalRatingRuleReport(double p_first_true) {
  constexpr double upper = kRatingRuleEqual / kRatingRuleCorrect;
  constexpr double lower = (kRatingRuleCorrect - kRatingRuleEqual) / kRatingRuleCorrect;
  if (p_first_true > upper) return PairChoice::kFirstMoreLikely;
  if (p_first_true < lower) return PairChoice::kSecondMoreLikely;
  return PairChoice::kEquallyLikely;
}

struct ScoreOutcome {
  double points = 0.0;
  double bonus_probability = 0.0;
};

// Probability of winning the bonus equals points / 100.
inline double BinarizedBonus(double points) {
  if (!(points >= 0.0 && points <= 100.0)) {
    throw std::out_of_range("binarized bonus: points must lie in [0,100], got " +
                            std::to_string(points));
  }
  return points / 100.0;
}

inline ScoreOutcome MakeScoreOutcome(double points) {
  return {points, BinarizedBonus(points)};
}

}  // namespace motivated

#endif  // MOTIVATED_EXPERIMENT_SCORING_HPP_
