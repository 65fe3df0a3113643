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

#ifndef MOTIVATED_EXPERIMENT_TOPICS_HPP_
#define MOTIVATED_EXPERIMENT_TOPICS_HPP_

// Question topics. The fixture format is data/topics.csv; the same table is
// compiled in so simulations do not depend on the working directory.

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "motivated/format.hpp"
#include "motivated/game_core.hpp"

namespace motivated {

// Message direction relative to the target number or median.
enum class Direction { kGreater, kLess };

constexpr Direction Opposite(Direction d) {
  return d == Direction::kGreater ? Direction::kLess : Direction::kGreater;
}
constexpr std::string_view ToString(Direction d) {
  return d == Direction::kGreater ? "greater" : "less";
}

enum class Party { kDem, kRep, kIndependentHalf };

constexpr std::string_view ToString(Party p) {
  switch (p) {
    case Party::kDem: return "dem";
    case Party::kRep: return "rep";
    case Party::kIndependentHalf: return "independent";
  }
  return "";
}

enum class TopicSet { kPrimary, kMedian };

struct Topic {
  std::string id;
  TopicSet set = TopicSet::kPrimary;
  bool political = false;
  std::optional<Direction> pro_dem;  // empty for neutral topics
  // Primary set: the candidate target numbers. Median set: one entry, the
  // receivers' median belief.
  std::vector<double> targets;
  double answer = std::numeric_limits<double>::quiet_NaN();  // primary set
  std::optional<Direction> true_direction;                   // median set

  friend bool operator==(const Topic& a, const Topic& b) {
    const bool same_answer = a.answer == b.answer ||
                             (std::isnan(a.answer) && std::isnan(b.answer));
    return a.id == b.id && a.set == b.set && a.political == b.political &&
           a.pro_dem == b.pro_dem && a.targets == b.targets && same_answer &&
           a.true_direction == b.true_direction;
  }

  // Direction the party is motivated to believe; empty for neutral topics or
  // independents.
  std::optional<Direction> ProDirection(Party party) const {
    if (!pro_dem || party == Party::kIndependentHalf) return std::nullopt;
    return party == Party::kDem ? *pro_dem : Opposite(*pro_dem);
  }

  // Truthful message for the given target (primary set) or the fixed one
  // (median set).
  Direction TrueDirection(double target) const {
    if (true_direction) return *true_direction;
    return answer > target ? Direction::kGreater : Direction::kLess;
  }
};

inline std::optional<Direction> ParseDirection(std::string_view s) {
  if (s == "greater") return Direction::kGreater;
  if (s == "less") return Direction::kLess;
  return std::nullopt;
}

namespace detail {

inline std::vector<std::string> SplitFields(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) out.emplace_back(Trim(field));
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace detail

// Parses the fixture CSV: '#' comment lines, then a header
// id,set,political,pro_dem,targets,answer,true_direction.
// Throws ConfigError with the offending line number.
inline std::vector<Topic> ParseTopicsCsv(std::istream& is) {
  std::vector<Topic> topics;
  std::string line;
  int line_no = 0;
  bool header = false;
  auto fail = [&](const std::string& what) {
    throw ConfigError("topics line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t(Trim(line));
    if (t.empty() || t.front() == '#') continue;
    if (!header) {
      if (t != "id,set,political,pro_dem,targets,answer,true_direction") {
        fail("unexpected header");
      }
      header = true;
      continue;
    }
    const auto f = detail::SplitFields(t, ',');
    if (f.size() != 7) fail("expected 7 fields");
    Topic topic;
    topic.id = f[0];
    if (topic.id.empty()) fail("empty id");
    if (f[1] == "expt1") {
      topic.set = TopicSet::kPrimary;
    } else if (f[1] == "expt2") {
      topic.set = TopicSet::kMedian;
    } else {
      fail("set must be expt1 or expt2");
    }
    if (f[2] != "0" && f[2] != "1") fail("political must be 0 or 1");
    topic.political = f[2] == "1";
    if (topic.political) {
      topic.pro_dem = ParseDirection(f[3]);
      if (!topic.pro_dem) fail("political topic needs pro_dem greater|less");
    } else if (!f[3].empty()) {
      fail("neutral topic cannot have a pro-party direction");
    }
    for (const auto& v : detail::SplitFields(f[4], ';')) {
      const auto x = ParseDouble(v);
      if (!x || !std::isfinite(*x)) fail("bad target '" + v + "'");
      topic.targets.push_back(*x);
    }
    if (topic.targets.empty()) fail("missing target");
    if (topic.set == TopicSet::kPrimary) {
      const auto a = ParseDouble(f[5]);
      if (!a || !std::isfinite(*a)) fail("primary topic needs an answer");
      topic.answer = *a;
      for (double target : topic.targets) {
        if (target == topic.answer) fail("target equals answer");
      }
      if (!f[6].empty()) fail("primary topic derives true_direction");
    } else {
      if (topic.targets.size() != 1) fail("median topic has one median");
      topic.true_direction = ParseDirection(f[6]);
      if (!topic.true_direction) fail("median topic needs true_direction");
    }
    topics.push_back(std::move(topic));
  }
  if (!header) throw ConfigError("topics: missing header");
  return topics;
}

inline std::vector<Topic> LoadTopicsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open topics file '" + path + "'");
  return ParseTopicsCsv(in);
}

inline constexpr std::string_view kBuiltinTopicsCsv =
    "id,set,political,pro_dem,targets,answer,true_direction\n"
    "us_crime,expt1,1,greater,300;500,366.7,\n"
    "immigrant_crime,expt1,1,less,90;213,96.2,\n"
    "racial_discrimination,expt1,1,less,5.0;8.5,6.45,\n"
    "media_bias,expt1,1,less,2;5,4,\n"
    "covid_restrictions,expt1,1,greater,10;50,19.5,\n"
    "gun_reform,expt1,1,less,220;320,318.6,\n"
    "unemployment,expt1,1,greater,3.2;5.1,5.04,\n"
    "wages,expt1,1,less,3.28;4,3.49,\n"
    "us_center_latitude,expt1,0,,30;45,39.833,\n"
    "random_number,expt1,0,,40;60,33.54026,\n"
    "us_crime,expt2,1,greater,500.0,,less\n"
    "immigrant_crime,expt2,1,less,213.0,,less\n"
    "racial_discrimination,expt2,1,less,8.50,,less\n"
    "media_bias,expt2,1,less,65,,greater\n"
    "covid_restrictions,expt2,1,greater,50.0,,less\n"
    "gun_reform,expt2,1,less,220.0,,greater\n"
    "unemployment,expt2,1,greater,3.20,,greater\n"
    "wages,expt2,1,less,4.00,,less\n"
    "us_center_latitude,expt2,0,,45.0,,less\n"
    "random_number,expt2,0,,50.0,,greater\n";

inline const std::vector<Topic>& BuiltinTopics() {
  static const std::vector<Topic> topics = [] {
    std::istringstream is{std::string(kBuiltinTopicsCsv)};
    return ParseTopicsCsv(is);
  }();
  return topics;
}

// First n_political political and n_neutral neutral topics of a set, in
// fixture order. Throws ConfigError when the fixture has too few.
inline std::vector<Topic> SelectTopics(const std::vector<Topic>& all,
                                       TopicSet set, int n_political,
                                       int n_neutral) {
  std::vector<Topic> pol, neu;
  for (const auto& t : all) {
    if (t.set != set) continue;
    auto& bucket = t.political ? pol : neu;
    if (static_cast<int>(bucket.size()) < (t.political ? n_political : n_neutral))
      bucket.push_back(t);
  }
  if (static_cast<int>(pol.size()) < n_political ||
      static_cast<int>(neu.size()) < n_neutral) {
    throw ConfigError("topic fixture has too few topics for the requested "
                      "n_political_topics / n_neutral_topics");
  }
  pol.insert(pol.end(), neu.begin(), neu.end());
  return pol;
}

}  // namespace motivated

#endif  // MOTIVATED_EXPERIMENT_TOPICS_HPP_
