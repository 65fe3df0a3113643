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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "motivated/experiment/agents.hpp"
#include "motivated/experiment/effects.hpp"
#include "motivated/experiment/scoring.hpp"
#include "motivated/experiment/simulation.hpp"
#include "motivated/experiment/topics.hpp"

namespace motivated {
namespace {

const Topic& FindTopic(const std::string& id, TopicSet set = TopicSet::kPrimary) {
  for (const auto& t : BuiltinTopics()) {
    if (t.id == id && t.set == set) return t;
  }
  throw std::runtime_error("no topic " + id);
}

// ---------------------------------------------------------------------------
// Topics.

TEST(Topics, BuiltinFixture) {
  const auto& all = BuiltinTopics();
  EXPECT_EQ(all.size(), 20u);
  const Topic& imm = FindTopic("immigrant_crime");
  EXPECT_TRUE(imm.political);
  EXPECT_EQ(imm.ProDirection(Party::kRep), Direction::kGreater);
  EXPECT_EQ(imm.ProDirection(Party::kDem), Direction::kLess);
  EXPECT_EQ(imm.TrueDirection(213.0), Direction::kLess);
  EXPECT_EQ(imm.TrueDirection(90.0), Direction::kGreater);
  const Topic& rnd = FindTopic("random_number");
  EXPECT_FALSE(rnd.political);
  EXPECT_FALSE(rnd.ProDirection(Party::kDem));
  const Topic& media2 = FindTopic("media_bias", TopicSet::kMedian);
  EXPECT_EQ(media2.targets, std::vector<double>{65.0});
  EXPECT_EQ(media2.TrueDirection(65.0), Direction::kGreater);
}

TEST(Topics, DataFileMatchesBuiltin) {
  EXPECT_EQ(LoadTopicsFile(std::string(MOTIVATED_SOURCE_DIR) + "/data/topics.csv"),
            BuiltinTopics());
}

TEST(Topics, ParseErrorsNameTheLine) {
  std::istringstream bad(
      "id,set,political,pro_dem,targets,answer,true_direction\n"
      "x,expt1,0,greater,1;2,1.5,\n");
  try {
    ParseTopicsCsv(bad);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Topics, Selection) {
  const auto t = SelectTopics(BuiltinTopics(), TopicSet::kPrimary, 7, 2);
  ASSERT_EQ(t.size(), 9u);
  EXPECT_EQ(std::count_if(t.begin(), t.end(), [](const Topic& x) { return x.political; }), 7);
  EXPECT_THROW(SelectTopics(BuiltinTopics(), TopicSet::kPrimary, 9, 0), ConfigError);
}

// ---------------------------------------------------------------------------
// Alignment, priors, ratings.

TEST(DeriveAlignment, Examples) {
  const Topic& imm = FindTopic("immigrant_crime");
  const Direction truth = imm.TrueDirection(213.0);
  EXPECT_EQ(DeriveAlignment(imm, Party::kRep, true, truth), Alignment::kFalseAligned);
  EXPECT_EQ(DeriveAlignment(imm, Party::kDem, true, truth), Alignment::kTrueAligned);
  EXPECT_EQ(DeriveAlignment(imm, Party::kDem, false, truth), Alignment::kUnknown);
  EXPECT_EQ(DeriveAlignment(FindTopic("random_number"), Party::kDem, true,
                            Direction::kLess),
            Alignment::kNeutral);
}

TEST(ReceiverPrior, DegenerateDistribution) {
  ReceiverAgent r;
  r.prior_mean = 0.6;
  r.prior_sd = 0.0;
  Rng rng(1, StreamTag::kReceiverPrior, 0);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(ReceiverPriorHigh(r, FindTopic("us_crime"), rng), 0.6);
  }
}

TEST(ReceiverPrior, PopulationMeanAndGrid) {
  ReceiverAgent r;  // defaults: mean 0.587, sd 0.2
  Rng rng(2, StreamTag::kReceiverPrior, 0);
  double sum = 0.0;
  constexpr int kDraws = 10000;
  for (int i = 0; i < kDraws; ++i) {
    const double p = ReceiverPriorHigh(r, FindTopic("us_crime"), rng);
    ASSERT_EQ(p, GridPrior(GridIndex(p)));
    ASSERT_GE(p, 0.0);
    ASSERT_LE(p, 1.0);
    sum += p;
  }
  EXPECT_NEAR(sum / kDraws, 0.59, 0.02);
}

TEST(ReceiverPrior, ConvertedToPriorOnTrue) {
  ReceiverAgent r;
  r.party = Party::kRep;
  r.prior_mean = 0.7;
  r.prior_sd = 0.0;
  const Topic& imm = FindTopic("immigrant_crime");  // Rep motive: greater
  Rng rng(3, StreamTag::kReceiverPrior, 0);
  EXPECT_EQ(ReceiverPrior(r, imm, Direction::kGreater, rng), 0.7);
  EXPECT_EQ(ReceiverPrior(r, imm, Direction::kLess, rng), 0.3);
}

TEST(PriorGridPmf, MatchesSampling) {
  const auto pmf = PriorGridPmf(0.587, 0.2);
  double total = 0.0;
  for (double x : pmf) total += x;
  EXPECT_NEAR(total, 1.0, 1e-12);
  Rng rng(4, StreamTag::kReceiverPrior, 0);
  std::array<int, kPriorGridSize> counts{};
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    ++counts[GridIndex(SnapToGrid(DrawTruncatedNormal(0.587, 0.2, rng)))];
  }
  for (int k = 0; k < kPriorGridSize; ++k) {
    EXPECT_NEAR(counts[k] / double(kDraws), pmf[k], 0.005) << k;
  }
}

TEST(RateMessage, UnbiasedIsBayes) {
  ReceiverAgent r;
  r.bias = 0.0;
  const Topic& t = FindTopic("us_crime");
  const Frame f = ReceiverFrame(t, r.party, 0.3);
  const SenderStrategy s{0.8, 0.4};
  EXPECT_EQ(RateMessage(r, f, f.high, true, s, {}),
            *BayesPosterior(0.3, s, Message::kHigh));
  EXPECT_EQ(RateMessage(r, f, Opposite(f.high), true, s, {}),
            *BayesPosterior(0.3, s, Message::kLow));
}

TEST(RateMessage, UninformativeStrategy) {
  ReceiverAgent r;
  r.bias = 0.114;
  const Topic& t = FindTopic("us_crime");
  const Frame f = ReceiverFrame(t, r.party, 0.5);
  const SenderStrategy s{0.5, 0.5};
  EXPECT_NEAR(RateMessage(r, f, f.high, true, s, {}), 0.557, 1e-12);
  EXPECT_NEAR(RateMessage(r, f, Opposite(f.high), true, s, {}), 0.443, 1e-12);
}

TEST(Property, ReceiverNaivete) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    ReceiverAgent r;
    r.bias = 3.9 * u(rng) - 1.95;
    r.party = (i & 1) ? Party::kDem : Party::kRep;
    const Topic& t = BuiltinTopics()[i % 10];
    const Frame f = ReceiverFrame(t, r.party, GridPrior(i % 11));
    const SenderStrategy s{u(rng), u(rng)};
    for (Direction d : {Direction::kGreater, Direction::kLess}) {
      ASSERT_EQ(RateMessage(r, f, d, true, s, {}), RateMessage(r, f, d, false, s, {}));
    }
  }
}

// ---------------------------------------------------------------------------
// Sender choices.

SenderAgent Sender(double gamma) {
  SenderAgent s;
  s.party = Party::kDem;
  s.honesty_weight = 1.0;
  s.rating_weight = gamma;
  s.belief_bias = 0.30;
  s.expressive_weight = 0.0;
  s.noise_rate = 0.0;
  return s;
}

// Immigrant crime at target 213: the truth is "less".
struct Case {
  const Topic& topic = FindTopic("immigrant_crime");
  Direction truth = Direction::kLess;
};

TEST(StrategyMethod, NoIncentivesAllTruthful) {
  Case c;
  Rng rng(6, StreamTag::kTrial, 0);
  for (auto party : {std::optional<Party>(Party::kRep), std::optional<Party>(Party::kDem),
                     std::optional<Party>()}) {
    const auto lies = StrategyMethodChoices(Sender(0.0), c.topic, c.truth, party, {}, rng);
    for (bool l : lies) EXPECT_FALSE(l);
  }
}

// Hand derivation with tau = 1, gamma = 10, lambda_hat_s = 0.30 against a
// Rep receiver (false message = x_H). For priors on truth in [0, 0.9] the
// receiver's perceived strategy is separating or x_H-pooling, giving the
// false message rating 1 and the true one at most 0.85, and 10 * 0.15 > 1.
// At prior-on-true 1 the high message is off path (rating 0).
TEST(StrategyMethod, FalseAlignedLies) {
  Case c;
  Rng rng(7, StreamTag::kTrial, 0);
  const auto lies =
      StrategyMethodChoices(Sender(10.0), c.topic, c.truth, Party::kRep, {}, rng);
  for (int k = 0; k < 10; ++k) EXPECT_TRUE(lies[k]) << k;
  EXPECT_FALSE(lies[10]);
}

TEST(StrategyMethod, FalseVsTrueAligned) {
  Case c;
  Rng rng(8, StreamTag::kTrial, 0);
  const SenderAgent s = Sender(10.0);
  const MessageValues fa = ValuesAtPriorOnTrue(s, c.topic, c.truth, Party::kRep, 0.5, {});
  const MessageValues ta = ValuesAtPriorOnTrue(s, c.topic, c.truth, Party::kDem, 0.5, {});
  EXPECT_GE(PrefersLie(s, c.topic, c.truth, fa), PrefersLie(s, c.topic, c.truth, ta));
  EXPECT_TRUE(PrefersLie(s, c.topic, c.truth, fa));
  EXPECT_FALSE(PrefersLie(s, c.topic, c.truth, ta));
}

TEST(Property, StrategyMethodMonotone) {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 3000; ++i) {
    SenderAgent s = Sender(30.0 * u(gen));
    s.honesty_weight = 0.1 + 2.0 * u(gen);
    s.belief_bias = 1.99 * u(gen);
    s.party = (i & 1) ? Party::kDem : Party::kRep;
    s.expressive_weight = u(gen) < 0.5 ? 0.0 : 2.0 * u(gen);
    PopulationBeliefs pop;
    pop.tau = 0.1 + 2.0 * u(gen);
    pop.gamma = 30.0 * u(gen);
    pop.lambda_hat_r = s.belief_bias * u(gen);
    const Topic& t = BuiltinTopics()[i % 10];
    const Direction truth = t.TrueDirection(t.targets[i % t.targets.size()]);
    std::optional<Party> known;
    if (i % 3 == 1) known = Party::kDem;
    if (i % 3 == 2) known = Party::kRep;
    Rng rng(9, StreamTag::kTrial, static_cast<std::uint64_t>(i));
    const auto lies = StrategyMethodChoices(s, t, truth, known, pop, rng);
    for (int k = 1; k < kPriorGridSize; ++k) {
      ASSERT_LE(lies[k], lies[k - 1]) << "draw " << i << " prior " << k;
    }
  }
}

TEST(Block2, Examples) {
  Case c;
  Rng rng(10, StreamTag::kTrial, 0);
  EXPECT_FALSE(ChooseMessageBlock2(Sender(0.0), c.topic, c.truth, Party::kRep,
                                   0.587, 0.2, {}, rng));
  EXPECT_FALSE(ChooseMessageBlock2(Sender(10.0), c.topic, c.truth, std::nullopt,
                                   0.5, 0.2, {}, rng));
  EXPECT_TRUE(ChooseMessageBlock2(Sender(1000.0), c.topic, c.truth, Party::kRep,
                                  0.587, 0.2, {}, rng));
}

TEST(Expt2, RatePair) {
  EXPECT_EQ(RatePairExpt2(0.0, true), PairChoice::kEquallyLikely);
  EXPECT_EQ(RatePairExpt2(0.114, true), PairChoice::kFirstMoreLikely);
  EXPECT_EQ(RatePairExpt2(0.08, true), PairChoice::kEquallyLikely);
  EXPECT_EQ(RatePairExpt2(-0.114, true), PairChoice::kSecondMoreLikely);
  EXPECT_EQ(RatePairExpt2(0.5, false), PairChoice::kEquallyLikely);
}

TEST(Expt2, SenderChoice) {
  const Topic& t = FindTopic("immigrant_crime", TopicSet::kMedian);
  Rng rng(11, StreamTag::kTrial, 0);
  // Rep receiver is motivated toward "greater", which is false here.
  EXPECT_TRUE(ChooseMessageExpt2(Sender(10.0), t, Direction::kLess, Party::kRep, rng));
  EXPECT_FALSE(ChooseMessageExpt2(Sender(10.0), t, Direction::kLess, Party::kDem, rng));
  EXPECT_FALSE(ChooseMessageExpt2(Sender(10.0), t, Direction::kLess, std::nullopt, rng));
  EXPECT_FALSE(ChooseMessageExpt2(Sender(0.0), t, Direction::kLess, Party::kRep, rng));
}

// ---------------------------------------------------------------------------
// Scoring.

TEST(Scoring, Quadratic) {
  EXPECT_EQ(ScoreQuadratic(1.0, true), 100.0);
  EXPECT_NEAR(ScoreQuadratic(0.7, true), 91.0, 1e-12);
  EXPECT_EQ(ScoreQuadratic(0.5, true), 75.0);
  EXPECT_EQ(ScoreQuadratic(0.5, false), 75.0);
  EXPECT_THROW(ScoreQuadratic(1.1, true), std::invalid_argument);
}

TEST(Scoring, Linear) {
  EXPECT_EQ(ScoreLinear(96.2, 96.2), 100.0);
  EXPECT_NEAR(ScoreLinear(90.0, 96.2), 93.8, 1e-12);
  EXPECT_EQ(ScoreLinear(0.0, 100.0), 0.0);
  EXPECT_EQ(ScoreLinear(0.0, 250.0), 0.0);
}

TEST(Scoring, RatingRule) {
  EXPECT_EQ(ScoreRatingRule(PairChoice::kEquallyLikely, true), 55.0);
  EXPECT_EQ(ScoreRatingRule(PairChoice::kEquallyLikely, false), 55.0);
  EXPECT_EQ(ScoreRatingRule(PairChoice::kFirstMoreLikely, true), 100.0);
  EXPECT_EQ(ScoreRatingRule(PairChoice::kFirstMoreLikely, false), 0.0);
  EXPECT_EQ(ScoreRatingRule(PairChoice::kSecondMoreLikely, false), 100.0);
}

TEST(Scoring, Bonus) {
  EXPECT_EQ(BinarizedBonus(0.0), 0.0);
  EXPECT_EQ(BinarizedBonus(100.0), 1.0);
  EXPECT_NEAR(BinarizedBonus(91.0), 0.91, 1e-15);
  EXPECT_THROW(BinarizedBonus(-1.0), std::out_of_range);
  EXPECT_THROW(BinarizedBonus(100.5), std::out_of_range);
  EXPECT_EQ(MakeScoreOutcome(40.0).bonus_probability, 0.4);
}

TEST(Property, QuadraticRuleIsHonestOnGrid) {
  for (int b = 0; b <= 100; ++b) {
    const double belief = b / 100.0;
    int best = 0;
    double best_v = -1.0;
    for (int k = 0; k <= 10; ++k) {
      const double v = ExpectedQuadraticScore(k / 10.0, belief);
      if (v > best_v + 1e-12) {
        best_v = v;
        best = k;
      }
    }
    // Nearest grid point; at exact midpoints either neighbour is optimal.
    EXPECT_LE(std::abs(best / 10.0 - belief), 0.05 + 1e-12) << belief;
  }
}

TEST(Property, RatingRuleSwitchPoints) {
  for (int i = 0; i <= 10000; ++i) {
    const double p = i / 10000.0;
    const PairChoice c = OptimalRatingRuleReport(p);
    const PairChoice expect = p > 0.55   ? PairChoice::kFirstMoreLikely
                              : p < 0.45 ? PairChoice::kSecondMoreLikely
                                         : PairChoice::kEquallyLikely;
    ASSERT_EQ(c, expect) << p;
  }
  EXPECT_EQ(OptimalRatingRuleReport(0.55), PairChoice::kEquallyLikely);
  EXPECT_EQ(OptimalRatingRuleReport(std::nextafter(0.55, 1.0)), PairChoice::kFirstMoreLikely);
  EXPECT_EQ(OptimalRatingRuleReport(0.45), PairChoice::kEquallyLikely);
  EXPECT_EQ(OptimalRatingRuleReport(std::nextafter(0.45, 0.0)), PairChoice::kSecondMoreLikely);
}

// ---------------------------------------------------------------------------
// Demand for information.

TEST(ValueOfPartyInfo, WorkedExample) {
  // Party 0 rates message 0 (its pro-party one) at 60.3, party 1 at 48.8.
  const std::array<std::array<double, 2>, 2> pts{{{60.3, 48.8}, {48.8, 60.3}}};
  const InfoValue v = ValueOfPartyInfo(pts, 0.5, 1.0);
  EXPECT_NEAR(v.gain, 5.75, 1e-12);
  EXPECT_TRUE(v.purchase);
  EXPECT_FALSE(ValueOfPartyInfo(pts, 0.5, 3.0).purchase);
}

TEST(ValueOfPartyInfo, NeutralAndUnbiased) {
  const Topic& neutral = FindTopic("random_number", TopicSet::kMedian);
  const InfoValue v = SenderValueOfPartyInfo(Sender(10.0), neutral, Direction::kGreater, 1.0);
  EXPECT_EQ(v.gain, 0.0);
  EXPECT_FALSE(v.purchase);
  SenderAgent unbiased = Sender(10.0);
  unbiased.belief_bias = 0.0;
  const Topic& pol = FindTopic("us_crime", TopicSet::kMedian);
  EXPECT_EQ(SenderValueOfPartyInfo(unbiased, pol, Direction::kLess, 1.0).gain, 0.0);
  EXPECT_GT(SenderValueOfPartyInfo(Sender(10.0), pol, Direction::kLess, 1.0).gain, 0.0);
}

// ---------------------------------------------------------------------------
// Simulation.

SimConfig SmallConfig(SimMode mode) {
  SimConfig c;
  c.mode = mode;
  c.n_senders = 40;
  c.n_receivers = 40;
  return c;
}

std::string Csv(const std::vector<TrialRecord>& r) {
  std::ostringstream os;
  WriteTrialCsv(os, r);
  return os.str();
}

TEST(RunExperiment, Deterministic) {
  for (SimMode m : {SimMode::kBlock1, SimMode::kBlock2, SimMode::kExpt2}) {
    const SimConfig c = SmallConfig(m);
    EXPECT_EQ(Csv(RunExperiment(c, 42)), Csv(RunExperiment(c, 42)));
    EXPECT_NE(Csv(RunExperiment(c, 42)), Csv(RunExperiment(c, 43)));
  }
}

TEST(RunExperiment, NoSenders) {
  SimConfig c = SmallConfig(SimMode::kBlock1);
  c.n_senders = 0;
  EXPECT_TRUE(RunExperiment(c, 1).empty());
}

TEST(RunExperiment, ValidationListsFields) {
  SimConfig c;
  c.epsilon = 2.0;
  c.prior_sd = -1.0;
  try {
    RunExperiment(c, 1);
    FAIL();
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("epsilon"), std::string::npos);
    EXPECT_NE(msg.find("prior_sd"), std::string::npos);
  }
}

TEST(RunExperiment, Block1Records) {
  const auto recs = RunExperiment(SmallConfig(SimMode::kBlock1), 7);
  ASSERT_EQ(recs.size(), 40u * 9u);
  for (const auto& r : recs) {
    ASSERT_EQ(r.choices.size(), 11u);
    ASSERT_TRUE(r.receiver_prior);
    ASSERT_EQ(r.realized_false, r.choices[GridIndex(*r.receiver_prior)]);
    ASSERT_EQ(r.alignment == Alignment::kUnknown, r.political && !r.info_revealed);
    if (!r.incentivized) {
      ASSERT_EQ(r.sender_points, 0.0);
    }
    ASSERT_GE(*r.realized_rating, 0.0);
    ASSERT_LE(*r.realized_rating, 1.0);
  }
}

TEST(RunExperiment, Expt2Records) {
  const auto recs = RunExperiment(SmallConfig(SimMode::kExpt2), 7);
  ASSERT_EQ(recs.size(), 40u * (9u + 4u));
  int demand = 0;
  for (const auto& r : recs) {
    ASSERT_EQ(r.choices.size(), 1u);
    ASSERT_TRUE(r.receiver_choice);
    if (r.round_kind == RoundKind::kDemand) {
      ++demand;
      ASSERT_TRUE(r.purchased);
      ASSERT_TRUE(r.incentivized);
      if (*r.purchased) {
        ASSERT_TRUE(r.info_revealed);
      }
    }
  }
  EXPECT_EQ(demand, 160);
}

TEST(RunExperiment, CsvRoundTrip) {
  for (SimMode m : {SimMode::kBlock1, SimMode::kBlock2, SimMode::kExpt2}) {
    const auto recs = RunExperiment(SmallConfig(m), 3);
    std::istringstream is(Csv(recs));
    EXPECT_EQ(ReadTrialCsv(is), recs);
  }
}

TEST(Property, StrategyMethodMonotoneInRecords) {
  SimConfig c = SmallConfig(SimMode::kBlock1);
  c.epsilon = 0.0;
  c.lambda_hat_s_sd = 0.3;
  c.tau_log_sd = 1.0;
  for (const auto& r : RunExperiment(c, 99)) {
    for (std::size_t k = 1; k < r.choices.size(); ++k) {
      ASSERT_LE(r.choices[k], r.choices[k - 1]);
    }
  }
}

TEST(Property, AlignmentSymmetry) {
  for (SimMode m : {SimMode::kBlock1, SimMode::kBlock2, SimMode::kExpt2}) {
    SimConfig a = SmallConfig(m);
    a.delta = 0.5;
    a.lambda_sd = 0.1;
    SimConfig b = a;
    b.mirror_parties = true;
    b.topics = BuiltinTopics();
    for (auto& t : b.topics) {
      if (t.pro_dem) t.pro_dem = Opposite(*t.pro_dem);
    }
    const auto ra = RunExperiment(a, 5);
    const auto rb = RunExperiment(b, 5);
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
      ASSERT_EQ(ra[i].choices, rb[i].choices) << i;
      ASSERT_EQ(ra[i].alignment, rb[i].alignment);
      ASSERT_EQ(ra[i].sender_alignment, rb[i].sender_alignment);
      ASSERT_EQ(ra[i].purchased, rb[i].purchased);
    }
    for (Contrast k : {Contrast::kPartyFalseVsTrue, Contrast::kPoliticalVsNeutral,
                       Contrast::kOwnPartyFalse}) {
      EXPECT_EQ(AggregateEffects(ra, k).estimate, AggregateEffects(rb, k).estimate);
    }
  }
}

// ---------------------------------------------------------------------------
// Effects.

TrialRecord Rec(int sender, Alignment a, int lies, int n = 10) {
  TrialRecord r;
  r.sender_id = sender;
  r.political = a != Alignment::kNeutral;
  r.alignment = a;
  r.incentivized = true;
  for (int i = 0; i < n; ++i) r.choices.push_back(i < lies);
  return r;
}

TEST(Effects, AllTruthful) {
  std::vector<TrialRecord> recs;
  for (int s = 0; s < 20; ++s) {
    recs.push_back(Rec(s, Alignment::kFalseAligned, 0));
    recs.push_back(Rec(s, Alignment::kTrueAligned, 0));
  }
  const auto e = AggregateEffects(recs, Contrast::kPartyFalseVsTrue);
  EXPECT_EQ(e.estimate, 0.0);
  EXPECT_EQ(e.ci_lo, 0.0);
  EXPECT_EQ(e.ci_hi, 0.0);
  EXPECT_EQ(e.n_clusters, 20);
  EXPECT_EQ(e.n_obs, 400);
}

TEST(Effects, HandBuiltShares) {
  std::vector<TrialRecord> recs;
  for (int s = 0; s < 10; ++s) {
    recs.push_back(Rec(s, Alignment::kFalseAligned, s < 3 ? 10 : 0));
    recs.push_back(Rec(s, Alignment::kTrueAligned, s < 2 ? 10 : 0));
  }
  const auto e = AggregateEffects(recs, Contrast::kPartyFalseVsTrue);
  EXPECT_NEAR(e.estimate, 10.0, 1e-9);
  EXPECT_LE(e.ci_lo, e.estimate);
  EXPECT_GE(e.ci_hi, e.estimate);
  EXPECT_LT(e.ci_lo, e.ci_hi);
}

TEST(Effects, IdenticalClustersDegenerateCi) {
  std::vector<TrialRecord> recs;
  for (int s = 0; s < 15; ++s) {
    recs.push_back(Rec(s, Alignment::kFalseAligned, 3));
    recs.push_back(Rec(s, Alignment::kTrueAligned, 2));
  }
  const auto e = AggregateEffects(recs, Contrast::kPartyFalseVsTrue);
  EXPECT_NEAR(e.estimate, 10.0, 1e-9);
  EXPECT_NEAR(e.ci_lo, e.estimate, 1e-9);
  EXPECT_NEAR(e.ci_hi, e.estimate, 1e-9);
}

TEST(Effects, EmptyCellIsNamed) {
  std::vector<TrialRecord> recs{Rec(0, Alignment::kTrueAligned, 1)};
  try {
    AggregateEffects(recs, Contrast::kPartyFalseVsTrue);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("false_aligned"), std::string::npos);
  }
  EffectOptions opt;
  opt.filter = IncentiveFilter::kUnincentivized;
  recs.push_back(Rec(1, Alignment::kFalseAligned, 1));
  try {
    AggregateEffects(recs, Contrast::kPartyFalseVsTrue, opt);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("unincentivized"), std::string::npos);
  }
}

TEST(Effects, DeterministicBootstrap) {
  const auto recs = RunExperiment(SmallConfig(SimMode::kBlock1), 8);
  EffectOptions opt;
  opt.seed = 17;
  const auto a = AggregateEffects(recs, Contrast::kIncentivizedVsNot, opt);
  const auto b = AggregateEffects(recs, Contrast::kIncentivizedVsNot, opt);
  EXPECT_EQ(a.ci_lo, b.ci_lo);
  EXPECT_EQ(a.ci_hi, b.ci_hi);
}

}  // namespace
}  // namespace motivated
