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

// motivated: command-line front end.
//
//   solve     equilibria at one parameter point (JSON)
//   verify    brute-force certification of every pure profile (JSON)
//   sweep     equilibrium-region table over one or two parameters (CSV)
//   figure    gamma intervals of the motivated-equilibrium rows (CSV)
//   simulate  experiment trials (CSV)
//   report    treatment-effect estimates from a trial CSV (CSV)
//
// Exit status: 0 success, 1 invalid input, 2 internal failure. Every command
// writes --out and <out>.manifest.json, and writes nothing when it fails.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motivated/cli/config.hpp"
#include "motivated/cli/manifest.hpp"
#include "motivated/equilibrium.hpp"
#include "motivated/equilibrium_json.hpp"
#include "motivated/experiment/effects.hpp"
#include "motivated/experiment/simulation.hpp"
#include "motivated/format.hpp"
#include "motivated/sweep.hpp"

namespace {

using namespace motivated;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInternal = 2;

struct ScenarioOptions {
  std::string config_path;
  std::vector<std::string> sets;
  std::optional<double> gamma;
};

void AddScenarioOptions(CLI::App* cmd, ScenarioOptions& o) {
  cmd->add_option("--config", o.config_path, "scenario file (key = value)");
  cmd->add_option("--set", o.sets, "override a config key: key=value");
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScenarioConfig LoadScenario(const ScenarioOptions& o) {
  ScenarioConfig cfg;
  if (!o.config_path.empty()) cfg = ParseConfig(ReadFile(o.config_path));
  std::vector<std::string> sets = o.sets;
  if (o.gamma) sets.push_back("gamma=" + FormatDouble(*o.gamma));
  if (!sets.empty()) cfg = ApplyOverrides(cfg, sets);
  return cfg;
}

// Resolves topics_file against the config file's directory.
void LoadTopics(ScenarioConfig& cfg, const ScenarioOptions& o) {
  if (cfg.topics_file.empty()) return;
  fs::path p(cfg.topics_file);
  if (p.is_relative() && !o.config_path.empty()) {
    const fs::path beside = fs::path(o.config_path).parent_path() / p;
    if (fs::exists(beside)) p = beside;
  }
  cfg.sim.topics = LoadTopicsFile(p.string());
}

// Writes the output and its manifest. Content is fully built before this is
// called, so a failed command never leaves a partial file.
void Emit(const std::string& out, const std::string& content,
          const std::string& command, const std::string& canonical_input,
          std::optional<std::uint64_t> seed) {
  const std::string manifest_path = out + ".manifest.json";
  {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + out + "'");
    f << content;
    if (!f) throw std::runtime_error("write failed for '" + out + "'");
  }
  const RunManifest m = MakeManifest(command, canonical_input, seed,
                                     {fs::path(out).filename().string()});
  std::ofstream f(manifest_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + manifest_path + "'");
  f << m.ToJson().dump(2) << '\n';
}

std::string Solve(const ScenarioConfig& cfg) {
  cfg.game().Validate();
  return EquilibriaDocument(cfg.game()).dump(2) + "\n";
}

std::string Verify(const ScenarioConfig& cfg, double grid_step) {
  const GameParams& p = cfg.game();
  p.Validate();
  const std::array<SenderStrategy, 4> pure{
      SenderStrategy::Truthful(), SenderStrategy::PoolHigh(),
      SenderStrategy::PoolLow(), SenderStrategy::AntiTruthful()};
  auto report_json = [](const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["clause_i_gain"] = r.clause_i_gain;
    j["clause_ii_gain"] = r.clause_ii_gain;
    j["clause_iii_gain"] = r.clause_iii_gain;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    return j;
  };
  nlohmann::ordered_json doc;
  doc["schema"] = "motivated.verification/1";
  doc["params"] = ToJson(p);
  doc["grid_step"] = grid_step;
  int disagreements = 0;
  nlohmann::ordered_json profiles = nlohmann::ordered_json::array();
  for (const auto& perceived : pure) {
    for (const auto& actual : pure) {
      const ProfileCandidate c{
          RatingFamily(perceived, p.prior, p.off_path).At(p.bias_true),
          perceived, actual};
      const VerificationReport r = VerifyProfile(c, p, grid_step);
      const int row = RowOf(perceived, actual);
      const bool closed = row > 0 && EvaluateMeRow(p, row).MinSlack() >= -kConditionTol;
      if (closed != r.pass) ++disagreements;
      nlohmann::ordered_json j;
      j["perceived_sender"] = ToString(perceived);
      j["actual_sender"] = ToString(actual);
      j["row"] = row;
      j["closed_form_holds"] = closed;
      j["verifier"] = report_json(r);
      profiles.push_back(std::move(j));
    }
  }
  doc["profiles"] = std::move(profiles);
  nlohmann::ordered_json bne = nlohmann::ordered_json::array();
  for (BneKind k : kBneKinds) {
    const PureBne b = EvaluatePureBne(k, p.prior, p.honesty_weight,
                                      p.rating_weight, p.bias_true, p.off_path);
    const bool closed = b.condition_slack >= -kConditionTol;
    const VerificationReport r = VerifyProfile(b, p, grid_step);
    if (closed != r.pass) ++disagreements;
    nlohmann::ordered_json j;
    j["kind"] = ToString(k);
    j["closed_form_holds"] = closed;
    j["verifier"] = report_json(r);
    bne.push_back(std::move(j));
  }
  doc["bne"] = std::move(bne);
  if (p.bias_true == 0.0) {
    nlohmann::ordered_json mixed = nlohmann::ordered_json::array();
    for (const auto& m : MixedBneList(p.prior, p.honesty_weight, p.rating_weight)) {
      nlohmann::ordered_json j = ToJson(m);
      j["verifier"] = report_json(VerifyProfile(m, p, grid_step));
      mixed.push_back(std::move(j));
    }
    doc["mixed_bne"] = std::move(mixed);
  }
  doc["disagreements"] = disagreements;
  return doc.dump(2) + "\n";
}

SweepAxis ParseAxis(const std::string& s) {
  // name=min:max:step
  const auto eq = s.find('=');
  auto bad = [&]() -> ConfigError {
    return ConfigError("--axis '" + s + "': expected name=min:max:step");
  };
  if (eq == std::string::npos) throw bad();
  SweepAxis a;
  a.name = s.substr(0, eq);
  std::vector<double> v;
  std::stringstream ss(s.substr(eq + 1));
  std::string part;
  while (std::getline(ss, part, ':')) {
    const auto x = ParseDouble(Trim(part));
    if (!x || !std::isfinite(*x)) throw bad();
    v.push_back(*x);
  }
  if (v.size() != 3) throw bad();
  a.min = v[0];
  a.max = v[1];
  a.step = v[2];
  return a;
}

std::string SweepCsv(const ScenarioConfig& cfg, const std::vector<std::string>& axes) {
  SweepSpec spec;
  spec.fixed = cfg.game();
  for (const auto& a : axes) spec.axes.push_back(ParseAxis(a));
  std::ostringstream os;
  WriteRegionCsv(os, Sweep(spec));
  return os.str();
}

std::string Simulate(const ScenarioConfig& cfg, std::uint64_t seed) {
  std::ostringstream os;
  WriteTrialCsv(os, RunExperiment(cfg.sim, seed));
  return os.str();
}

std::string Report(const std::vector<TrialRecord>& records, int reps,
                   std::uint64_t seed) {
  std::vector<EffectRow> rows;
  for (Contrast c : kContrasts) {
    for (IncentiveFilter f : {IncentiveFilter::kAll, IncentiveFilter::kIncentivized,
                              IncentiveFilter::kUnincentivized}) {
      if (c == Contrast::kIncentivizedVsNot && f != IncentiveFilter::kAll) continue;
      EffectOptions opt;
      opt.filter = f;
      opt.bootstrap_reps = reps;
      opt.seed = seed;
      try {
        rows.push_back({f, AggregateEffects(records, c, opt)});
      } catch (const std::invalid_argument& e) {
        std::cerr << "note: " << ToString(c) << " [" << ToString(f)
                  << "] skipped: " << e.what() << '\n';
      }
    }
  }
  std::ostringstream os;
  WriteEffectsCsv(os, rows);
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motivated-reasoning sender-receiver game: equilibria, sweeps "
               "and experiment simulation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string out;
  ScenarioOptions scen;
  double grid_step = kDefaultGridStep;
  std::vector<std::string> axes;
  std::string panel;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> report_seed;
  std::string trials_path;
  std::string mode;

  auto* solve = app.add_subcommand("solve", "equilibria at one parameter point");
  auto* verify = app.add_subcommand("verify", "brute-force check of every pure profile");
  auto* sweep = app.add_subcommand("sweep", "equilibrium-region table");
  auto* figure = app.add_subcommand("figure", "gamma intervals of the equilibrium rows");
  auto* simulate = app.add_subcommand("simulate", "simulate experiment trials");
  auto* report = app.add_subcommand("report", "treatment effects from a trial CSV");

  for (auto* cmd : {solve, verify, sweep, simulate}) AddScenarioOptions(cmd, scen);
  for (auto* cmd : {solve, verify}) {
    cmd->add_option("--gamma", scen.gamma, "override the rating weight");
  }
  verify->add_option("--grid", grid_step, "receiver rating grid step")
      ->check(CLI::Range(1e-6, 1e-2));
  sweep->add_option("--axis", axes, "name=min:max:step (one or two)")
      ->required()
      ->expected(1, 2);
  figure->add_option("--panel", panel, "A, B or C")->required();
  simulate->add_option("--seed", seed, "64-bit seed")->required();
  simulate->add_option("--mode", mode, "block1, block2 or expt2");
  report->add_option("--trials", trials_path, "trial CSV from simulate")->required();
  report->add_option("--config", scen.config_path, "scenario file (bootstrap_reps, seed)");
  report->add_option("--seed", report_seed, "bootstrap seed");
  for (auto* cmd : {solve, verify, sweep, figure, simulate, report}) {
    cmd->add_option("--out", out, "output file")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (figure->parsed()) {
      const Panel p = ParsePanel(panel);
      std::ostringstream os;
      WriteFigureCsv(os, FigureEqvizData(p));
      Emit(out, os.str(), "figure", "panel=" + panel, std::nullopt);
      return kExitOk;
    }
    if (report->parsed()) {
      ScenarioConfig cfg = LoadScenario(scen);
      std::ifstream in(trials_path, std::ios::binary);
      if (!in) throw ConfigError("cannot read '" + trials_path + "'");
      const auto records = ReadTrialCsv(in);
      const std::uint64_t s = report_seed ? *report_seed : cfg.seed.value_or(0);
      const std::string content = Report(records, cfg.bootstrap_reps, s);
      Emit(out, content, "report",
           SerializeConfig(cfg) + "trials_hash = " +
               HexDigest(Fnv1a64(ReadFile(trials_path))) + "\n",
           s);
      return kExitOk;
    }

    ScenarioConfig cfg = LoadScenario(scen);
    if (simulate->parsed() && !mode.empty()) cfg = ApplyOverrides(cfg, {"mode=" + mode});
    const std::string canonical = SerializeConfig(cfg);
    if (solve->parsed()) {
      Emit(out, Solve(cfg), "solve", canonical, std::nullopt);
    } else if (verify->parsed()) {
      Emit(out, Verify(cfg, grid_step), "verify",
           canonical + "grid = " + FormatDouble(grid_step) + "\n", std::nullopt);
    } else if (sweep->parsed()) {
      std::string extra;
      for (const auto& a : axes) extra += "axis = " + a + "\n";
      Emit(out, SweepCsv(cfg, axes), "sweep", canonical + extra, std::nullopt);
    } else if (simulate->parsed()) {
      LoadTopics(cfg, scen);
      Emit(out, Simulate(cfg, seed), "simulate", canonical, seed);
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
