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

#ifndef MOTIVATED_EXPERIMENT_EFFECTS_HPP_
#define MOTIVATED_EXPERIMENT_EFFECTS_HPP_

// Difference-in-means treatment contrasts with a sender-clustered percentile
// bootstrap. Estimates are in percentage points.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "motivated/experiment/simulation.hpp"
#include "motivated/rng.hpp"

namespace motivated {

enum class Contrast {
  kPartyFalseVsTrue,
  kPartyFalseVsNoInfo,
  kPoliticalVsNeutral,
  kIncentivizedVsNot,
  kOwnPartyFalse,
  kInfoPurchaseGap,
};

inline constexpr std::array<Contrast, 6> kContrasts{
    Contrast::kPartyFalseVsTrue,  Contrast::kPartyFalseVsNoInfo,
    Contrast::kPoliticalVsNeutral, Contrast::kIncentivizedVsNot,
    Contrast::kOwnPartyFalse,      Contrast::kInfoPurchaseGap};

constexpr std::string_view ToString(Contrast c) {
  switch (c) {
    case Contrast::kPartyFalseVsTrue: return "party_false_vs_true";
    case Contrast::kPartyFalseVsNoInfo: return "party_false_vs_noinfo";
    case Contrast::kPoliticalVsNeutral: return "political_vs_neutral";
    case Contrast::kIncentivizedVsNot: return "incentivized_vs_not";
    case Contrast::kOwnPartyFalse: return "own_party_false";
    case Contrast::kInfoPurchaseGap: return "info_purchase_gap";
  }
  return "";
}

inline std::optional<Contrast> ParseContrast(std::string_view s) {
  for (Contrast c : kContrasts) {
    if (ToString(c) == s) return c;
  }
  return std::nullopt;
}

enum class IncentiveFilter { kAll, kIncentivized, kUnincentivized };

constexpr std::string_view ToString(IncentiveFilter f) {
  switch (f) {
    case IncentiveFilter::kAll: return "all";
    case IncentiveFilter::kIncentivized: return "incentivized";
    case IncentiveFilter::kUnincentivized: return "unincentivized";
  }
  return "";
}

struct EffectOptions {
  IncentiveFilter filter = IncentiveFilter::kAll;
  int bootstrap_reps = 1000;
  std::uint64_t seed = 0;
  double ci_level = 0.95;
};

struct EffectEstimate {
  std::string contrast;
  double estimate = 0.0;  // percentage points
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  int n_clusters = 0;
  int n_obs = 0;
};

namespace detail {

struct CellSums {
  double sum_a = 0.0, sum_b = 0.0;
  double n_a = 0.0, n_b = 0.0;
};

// Which cell a record belongs to: 'A', 'B' or 0.
inline char CellOf(Contrast c, const TrialRecord& r) {
  const bool message = r.round_kind == RoundKind::kMessage;
  switch (c) {
    case Contrast::kPartyFalseVsTrue:
      if (!message) return 0;
      if (r.alignment == Alignment::kFalseAligned) return 'A';
      if (r.alignment == Alignment::kTrueAligned) return 'B';
      return 0;
    case Contrast::kPartyFalseVsNoInfo:
      if (!message) return 0;
      if (r.alignment == Alignment::kFalseAligned) return 'A';
      if (r.alignment == Alignment::kUnknown) return 'B';
      return 0;
    case Contrast::kPoliticalVsNeutral:
      if (!message) return 0;
      return r.political ? 'A' : 'B';
    case Contrast::kIncentivizedVsNot:
      if (!message) return 0;
      return r.incentivized ? 'A' : 'B';
    case Contrast::kOwnPartyFalse:
      if (!message) return 0;
      if (r.sender_alignment == Alignment::kFalseAligned) return 'A';
      if (r.sender_alignment == Alignment::kTrueAligned) return 'B';
      return 0;
    case Contrast::kInfoPurchaseGap:
      if (message || !r.purchased) return 0;
      return r.political ? 'A' : 'B';
  }
  return 0;
}

inline std::pair<std::string, std::string> CellNames(Contrast c) {
  switch (c) {
    case Contrast::kPartyFalseVsTrue: return {"false_aligned", "true_aligned"};
    case Contrast::kPartyFalseVsNoInfo: return {"false_aligned", "unknown"};
    case Contrast::kPoliticalVsNeutral: return {"political", "neutral"};
    case Contrast::kIncentivizedVsNot: return {"incentivized", "unincentivized"};
    case Contrast::kOwnPartyFalse:
      return {"sender_false_aligned", "sender_true_aligned"};
    case Contrast::kInfoPurchaseGap:
      return {"political_demand", "neutral_demand"};
  }
  return {};
}

inline bool PassesFilter(IncentiveFilter f, const TrialRecord& r) {
  switch (f) {
    case IncentiveFilter::kAll: return true;
    case IncentiveFilter::kIncentivized: return r.incentivized;
    case IncentiveFilter::kUnincentivized: return !r.incentivized;
  }
  return true;
}

// Linear interpolation between order statistics.
inline double Quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace detail

// Mean of the outcome in cell A minus cell B. The outcome is the false
// message indicator per choice, or the purchase indicator for
// info_purchase_gap. Throws std::invalid_argument naming an empty cell.
inline EffectEstimate AggregateEffects(const std::vector<TrialRecord>& records,
                                       Contrast contrast,
                                       const EffectOptions& opt = {}) {
  if (contrast == Contrast::kIncentivizedVsNot &&
      opt.filter != IncentiveFilter::kAll) {
    throw std::invalid_argument(
        "incentivized_vs_not cannot be restricted to one incentive arm");
  }
  std::map<int, detail::CellSums> clusters;
  int n_obs = 0;
  for (const auto& r : records) {
    if (!detail::PassesFilter(opt.filter, r)) continue;
    const char cell = detail::CellOf(contrast, r);
    if (!cell) continue;
    double sum = 0.0, n = 0.0;
    if (contrast == Contrast::kInfoPurchaseGap) {
      sum = *r.purchased ? 1.0 : 0.0;
      n = 1.0;
    } else {
      for (bool lie : r.choices) sum += lie ? 1.0 : 0.0;
      n = static_cast<double>(r.choices.size());
    }
    if (n == 0.0) continue;
    auto& cs = clusters[r.sender_id];
    (cell == 'A' ? cs.sum_a : cs.sum_b) += sum;
    (cell == 'A' ? cs.n_a : cs.n_b) += n;
    n_obs += static_cast<int>(n);
  }

  detail::CellSums total;
  for (const auto& [id, cs] : clusters) {
    total.sum_a += cs.sum_a;
    total.sum_b += cs.sum_b;
    total.n_a += cs.n_a;
    total.n_b += cs.n_b;
  }
  const auto [name_a, name_b] = detail::CellNames(contrast);
  const std::string arm = opt.filter == IncentiveFilter::kAll
                              ? std::string()
                              : " (" + std::string(ToString(opt.filter)) + ")";
  if (total.n_a == 0.0) throw std::invalid_argument("empty cell: " + name_a + arm);
  if (total.n_b == 0.0) throw std::invalid_argument("empty cell: " + name_b + arm);

  EffectEstimate est;
  est.contrast = std::string(ToString(contrast));
  est.estimate = 100.0 * (total.sum_a / total.n_a - total.sum_b / total.n_b);
  est.n_clusters = static_cast<int>(clusters.size());
  est.n_obs = n_obs;

  std::vector<detail::CellSums> cl;
  cl.reserve(clusters.size());
  for (const auto& [id, cs] : clusters) cl.push_back(cs);
  Rng rng(opt.seed, StreamTag::kBootstrap, static_cast<std::uint64_t>(contrast));
  std::vector<double> reps;
  reps.reserve(static_cast<std::size_t>(std::max(opt.bootstrap_reps, 0)));
  for (int b = 0; b < opt.bootstrap_reps; ++b) {
    detail::CellSums s;
    for (std::size_t i = 0; i < cl.size(); ++i) {
      const auto& c = cl[rng.Index(cl.size())];
      s.sum_a += c.sum_a;
      s.sum_b += c.sum_b;
      s.n_a += c.n_a;
      s.n_b += c.n_b;
    }
    if (s.n_a == 0.0 || s.n_b == 0.0) continue;
    reps.push_back(100.0 * (s.sum_a / s.n_a - s.sum_b / s.n_b));
  }
  if (reps.empty()) {
    est.ci_lo = est.ci_hi = est.estimate;
    return est;
  }
  std::sort(reps.begin(), reps.end());
  const double tail = (1.0 - opt.ci_level) / 2.0;
  // Percentile intervals can miss a skewed point estimate by rounding; keep
  // the interval around it.
  est.ci_lo = std::min(detail::Quantile(reps, tail), est.estimate);
  est.ci_hi = std::max(detail::Quantile(reps, 1.0 - tail), est.estimate);
  return est;
}

struct EffectRow {
  IncentiveFilter filter = IncentiveFilter::kAll;
  EffectEstimate effect;
};

// Columns: contrast,filter,estimate_pp,ci_lo_pp,ci_hi_pp,n_clusters,n_obs
inline void WriteEffectsCsv(std::ostream& os, const std::vector<EffectRow>& rows) {
  os << "contrast,filter,estimate_pp,ci_lo_pp,ci_hi_pp,n_clusters,n_obs\n";
  for (const auto& r : rows) {
    os << r.effect.contrast << ',' << ToString(r.filter) << ','
       << FormatDouble(r.effect.estimate) << ',' << FormatDouble(r.effect.ci_lo)
       << ',' << FormatDouble(r.effect.ci_hi) << ',' << r.effect.n_clusters << ','
       << r.effect.n_obs << '\n';
  }
}

}  // namespace motivated

#endif  // MOTIVATED_EXPERIMENT_EFFECTS_HPP_
