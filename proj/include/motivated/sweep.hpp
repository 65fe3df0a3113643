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

#ifndef MOTIVATED_SWEEP_HPP_
#define MOTIVATED_SWEEP_HPP_

// Equilibrium-region tables over parameter grids, and the analytic interval
// data behind the three equilibrium-visualization panels.
//
// Region CSV columns, in order:
//   <axis names...>,bne_sep,bne_poolH,bne_poolL,me_row1,...,me_row6
// with 0/1 flags. Endpoint CSV columns: line,gamma_lo,gamma_hi ("inf" for an
// unbounded upper end).

#include <array>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include "motivated/equilibrium.hpp"
#include "motivated/format.hpp"

namespace motivated {

struct SweepAxis {
  std::string name;  // gamma, tau, prior, lambda, lambda_hat_r, lambda_hat_s
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  std::size_t Count() const {
    return static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
  }
  double At(std::size_t i) const { return min + static_cast<double>(i) * step; }
};

struct SweepSpec {
  std::vector<SweepAxis> axes;  // one or two
  GameParams fixed;
};

struct RegionRow {
  std::vector<double> values;
  std::array<bool, 3> bne{};
  std::array<bool, kMeRows> me{};
  std::array<double, 3> bne_slack{};
  std::array<double, kMeRows> me_slack{};
};

struct RegionTable {
  std::vector<std::string> axis_names;
  std::vector<RegionRow> rows;
};

inline double& ParamByName(GameParams& p, const std::string& name) {
  if (name == "gamma") return p.rating_weight;
  if (name == "tau") return p.honesty_weight;
  if (name == "prior") return p.prior;
  if (name == "lambda") return p.bias_true;
  if (name == "lambda_hat_r") return p.bias_hat_receiver;
  if (name == "lambda_hat_s") return p.bias_hat_sender;
  throw ConfigError("unknown sweep parameter '" + name +
                    "' (expected gamma, tau, prior, lambda, lambda_hat_r, "
                    "lambda_hat_s)");
}

inline void ValidateSweep(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2) {
    throw ConfigError("a sweep varies one or two parameters");
  }
  GameParams probe = spec.fixed;
  for (const auto& a : spec.axes) {
    ParamByName(probe, a.name);
    if (!(a.step > 0.0)) throw ConfigError("sweep step must be > 0");
    if (!(a.min <= a.max)) throw ConfigError("sweep min must not exceed max");
  }
  if (spec.axes.size() == 2 && spec.axes[0].name == spec.axes[1].name) {
    throw ConfigError("sweep axes must differ");
  }
}

// Evaluates one grid point from scratch.
inline RegionRow EvaluatePoint(const GameParams& p, std::vector<double> values) {
  RegionRow row;
  row.values = std::move(values);
  for (std::size_t k = 0; k < kBneKinds.size(); ++k) {
    const PureBne b = EvaluatePureBne(kBneKinds[k], p.prior, p.honesty_weight,
                                      p.rating_weight, p.bias_true, p.off_path);
    row.bne_slack[k] = b.condition_slack;
    row.bne[k] = b.condition_slack >= -kConditionTol;
  }
  for (int r = 1; r <= kMeRows; ++r) {
    const MotivatedEquilibrium me = EvaluateMeRow(p, r);
    row.me_slack[r - 1] = me.MinSlack();
    row.me[r - 1] = row.me_slack[r - 1] >= -kConditionTol;
  }
  return row;
}

// Rows in ascending order; the first axis varies slowest.
inline RegionTable Sweep(const SweepSpec& spec) {
  ValidateSweep(spec);
  RegionTable table;
  for (const auto& a : spec.axes) table.axis_names.push_back(a.name);

  const SweepAxis& outer = spec.axes[0];
  const bool two = spec.axes.size() == 2;
  const std::size_t inner_n = two ? spec.axes[1].Count() : 1;
  for (std::size_t i = 0; i < outer.Count(); ++i) {
    for (std::size_t j = 0; j < inner_n; ++j) {
      GameParams p = spec.fixed;
      std::vector<double> values{outer.At(i)};
      ParamByName(p, outer.name) = values.back();
      if (two) {
        values.push_back(spec.axes[1].At(j));
        ParamByName(p, spec.axes[1].name) = values.back();
      }
      p.Validate();
      table.rows.push_back(EvaluatePoint(p, std::move(values)));
    }
  }
  return table;
}

inline void WriteRegionCsv(std::ostream& os, const RegionTable& t) {
  for (const auto& n : t.axis_names) os << n << ',';
  os << "bne_sep,bne_poolH,bne_poolL";
  for (int r = 1; r <= kMeRows; ++r) os << ",me_row" << r;
  os << '\n';
  for (const auto& row : t.rows) {
    for (double v : row.values) os << FormatDouble(v) << ',';
    for (std::size_t k = 0; k < row.bne.size(); ++k) {
      os << (k ? "," : "") << (row.bne[k] ? 1 : 0);
    }
    for (bool f : row.me) os << ',' << (f ? 1 : 0);
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// Visualization panels: pi = 0.587, tau = 1, lambda = lambda_hat_r, full
// punishment off path.

enum class Panel { kA, kB, kC };

inline GameParams PanelParams(Panel panel) {
  GameParams p;
  p.prior = 0.587;
  p.honesty_weight = 1.0;
  p.off_path = OffPathPolicy::FullPunishment();
  switch (panel) {
    case Panel::kA:
      p.bias_true = p.bias_hat_receiver = 0.114;
      p.bias_hat_sender = 0.30;
      break;
    case Panel::kB:
      p.bias_true = p.bias_hat_receiver = 0.114;
      p.bias_hat_sender = 0.114;
      break;
    case Panel::kC:
      p.bias_true = p.bias_hat_receiver = 0.30;
      p.bias_hat_sender = 0.30;
      break;
  }
  p.rating_weight = 0.0;
  return p;
}

inline Panel ParsePanel(const std::string& s) {
  if (s == "A" || s == "a") return Panel::kA;
  if (s == "B" || s == "b") return Panel::kB;
  if (s == "C" || s == "c") return Panel::kC;
  throw ConfigError("panel must be A, B or C");
}

struct FigureLine {
  std::string line;  // me_row<k>
  int row = 0;
  GammaInterval interval;
};

// Lines with positive width only; a row that holds at a single gamma is not
// drawn.
inline std::vector<FigureLine> FigureEqvizData(Panel panel) {
  std::vector<FigureLine> out;
  const MeRegion region = ComputeMeRegion(PanelParams(panel));
  for (int r = 1; r <= kMeRows; ++r) {
    const auto& iv = region[r - 1];
    if (!iv || iv->Degenerate()) continue;
    out.push_back({"me_row" + std::to_string(r), r, *iv});
  }
  return out;
}

inline void WriteFigureCsv(std::ostream& os,
                           const std::vector<FigureLine>& lines) {
  os << "line,gamma_lo,gamma_hi\n";
  for (const auto& l : lines) {
    os << l.line << ',' << FormatDouble(l.interval.lo) << ','
       << FormatDouble(l.interval.hi) << '\n';
  }
}

}  // namespace motivated

#endif  // MOTIVATED_SWEEP_HPP_
