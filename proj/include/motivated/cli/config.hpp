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

#ifndef MOTIVATED_CLI_CONFIG_HPP_
#define MOTIVATED_CLI_CONFIG_HPP_

// Scenario files: one `key = value` per line, `#` starts a comment, blank
// lines are ignored. Every key is optional; an empty file gives the default
// calibration. Keys, in serialization order:
//
//   mode               block1 | block2 | expt2
//   prior              P(high state), [0,1]
//   tau                honesty weight, > 0
//   gamma              rating weight, >= 0
//   lambda             receiver bias, (-2,2)
//   lambda_hat_r       receiver's belief about the bias, [0,2)
//   lambda_hat_s       sender's belief about the bias, [lambda_hat_r,2)
//   off_path           full | custom
//   off_path_h         off-path rating of the high message (custom only)
//   off_path_l         off-path rating of the low message (custom only)
//   n_senders, n_receivers, n_political_topics, n_neutral_topics
//   tau_log_sd, lambda_sd, lambda_hat_s_sd, prior_mean, prior_sd
//   epsilon, delta, p_incentivized, p_info_revealed, info_price
//   demand_rounds, bootstrap_reps
//   topics_file        topic fixture CSV; built-in table when absent
//   seed               unsigned 64-bit

#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "motivated/experiment/simulation.hpp"
#include "motivated/format.hpp"
#include "motivated/game_core.hpp"

namespace motivated {

struct ScenarioConfig {
  SimConfig sim;
  std::string topics_file;
  std::optional<std::uint64_t> seed;
  int bootstrap_reps = 1000;

  const GameParams& game() const { return sim.game; }

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Parse failure. errors() holds one message per problem, each prefixed with
// its line number.
class ConfigParseError : public ConfigError {
 public:
  explicit ConfigParseError(std::vector<std::string> errors)
      : ConfigError(Join(errors)), errors_(std::move(errors)) {}
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  static std::string Join(const std::vector<std::string>& errors) {
    std::string out;
    for (const auto& e : errors) out += (out.empty() ? "" : "\n") + e;
    return out;
  }
  std::vector<std::string> errors_;
};

namespace detail {

// Returns an error message, or nullopt when the value was applied.
using Setter = std::function<std::optional<std::string>(ScenarioConfig&,
                                                        std::string_view)>;

struct KeySpec {
  std::string_view name;
  Setter set;
  std::function<std::string(const ScenarioConfig&)> get;
};

inline Setter Real(std::function<double&(ScenarioConfig&)> field,
                   std::function<bool(double)> ok, std::string rule) {
  return [field, ok, rule](ScenarioConfig& c,
                           std::string_view v) -> std::optional<std::string> {
    const auto x = ParseDouble(v);
    if (!x || std::isnan(*x)) return "expected a number, got '" + std::string(v) + "'";
    if (!ok(*x)) return rule;
    field(c) = *x;
    return std::nullopt;
  };
}

inline Setter Int(std::function<int&(ScenarioConfig&)> field, int min,
                  std::string rule) {
  return [field, min, rule](ScenarioConfig& c,
                            std::string_view v) -> std::optional<std::string> {
    int x = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
      return "expected an integer, got '" + std::string(v) + "'";
    }
    if (x < min) return rule;
    field(c) = x;
    return std::nullopt;
  };
}

inline bool Finite(double x) { return std::isfinite(x); }
inline bool Prob(double x) { return x >= 0.0 && x <= 1.0; }
inline bool NonNeg(double x) { return x >= 0.0 && std::isfinite(x); }

inline const std::vector<KeySpec>& KeySpecs() {
  using C = ScenarioConfig;
  auto real_get = [](std::function<double(const C&)> f) {
    return [f](const C& c) { return FormatDouble(f(c)); };
  };
  auto int_get = [](std::function<int(const C&)> f) {
    return [f](const C& c) { return std::to_string(f(c)); };
  };
  static const std::vector<KeySpec> specs = {
      {"mode",
       [](C& c, std::string_view v) -> std::optional<std::string> {
         const auto m = ParseSimMode(v);
         if (!m) return "mode must be block1, block2 or expt2";
         c.sim.mode = *m;
         return std::nullopt;
       },
       [](const C& c) { return std::string(ToString(c.sim.mode)); }},
      {"prior",
       Real([](C& c) -> double& { return c.sim.game.prior; }, Prob,
            "prior must lie in [0,1]"),
       real_get([](const C& c) { return c.sim.game.prior; })},
      {"tau",
       Real([](C& c) -> double& { return c.sim.game.honesty_weight; },
            [](double x) { return x > 0.0 && Finite(x); },
            "tau must be > 0"),
       real_get([](const C& c) { return c.sim.game.honesty_weight; })},
      {"gamma",
       Real([](C& c) -> double& { return c.sim.game.rating_weight; }, NonNeg,
            "gamma must be >= 0 (and finite)"),
       real_get([](const C& c) { return c.sim.game.rating_weight; })},
      {"lambda",
       Real([](C& c) -> double& { return c.sim.game.bias_true; },
            [](double x) { return x > -2.0 && x < 2.0; },
            "lambda must lie in (-2,2)"),
       real_get([](const C& c) { return c.sim.game.bias_true; })},
      {"lambda_hat_r",
       Real([](C& c) -> double& { return c.sim.game.bias_hat_receiver; },
            [](double x) { return x >= 0.0 && x < 2.0; },
            "lambda_hat_r must lie in [0,2)"),
       real_get([](const C& c) { return c.sim.game.bias_hat_receiver; })},
      {"lambda_hat_s",
       Real([](C& c) -> double& { return c.sim.game.bias_hat_sender; },
            [](double x) { return x >= 0.0 && x < 2.0; },
            "lambda_hat_s must lie in [0,2)"),
       real_get([](const C& c) { return c.sim.game.bias_hat_sender; })},
      {"off_path",
       [](C& c, std::string_view v) -> std::optional<std::string> {
         if (v == "full") {
           c.sim.game.off_path.kind = OffPathPolicy::Kind::kFullPunishment;
         } else if (v == "custom") {
           c.sim.game.off_path.kind = OffPathPolicy::Kind::kCustom;
         } else {
           return "off_path must be full or custom";
         }
         return std::nullopt;
       },
       [](const C& c) {
         return std::string(c.sim.game.off_path.kind ==
                                    OffPathPolicy::Kind::kCustom
                                ? "custom"
                                : "full");
       }},
      {"off_path_h",
       Real([](C& c) -> double& { return c.sim.game.off_path.rating_msg_h; },
            Prob, "off_path_h must lie in [0,1]"),
       real_get([](const C& c) { return c.sim.game.off_path.rating_msg_h; })},
      {"off_path_l",
       Real([](C& c) -> double& { return c.sim.game.off_path.rating_msg_l; },
            Prob, "off_path_l must lie in [0,1]"),
       real_get([](const C& c) { return c.sim.game.off_path.rating_msg_l; })},
      {"n_senders",
       Int([](C& c) -> int& { return c.sim.n_senders; }, 0,
           "n_senders must be >= 0"),
       int_get([](const C& c) { return c.sim.n_senders; })},
      {"n_receivers",
       Int([](C& c) -> int& { return c.sim.n_receivers; }, 1,
           "n_receivers must be >= 1"),
       int_get([](const C& c) { return c.sim.n_receivers; })},
      {"n_political_topics",
       Int([](C& c) -> int& { return c.sim.n_political_topics; }, 0,
           "n_political_topics must be >= 0"),
       int_get([](const C& c) { return c.sim.n_political_topics; })},
      {"n_neutral_topics",
       Int([](C& c) -> int& { return c.sim.n_neutral_topics; }, 0,
           "n_neutral_topics must be >= 0"),
       int_get([](const C& c) { return c.sim.n_neutral_topics; })},
      {"tau_log_sd",
       Real([](C& c) -> double& { return c.sim.tau_log_sd; }, NonNeg,
            "tau_log_sd must be >= 0"),
       real_get([](const C& c) { return c.sim.tau_log_sd; })},
      {"lambda_sd",
       Real([](C& c) -> double& { return c.sim.lambda_sd; }, NonNeg,
            "lambda_sd must be >= 0"),
       real_get([](const C& c) { return c.sim.lambda_sd; })},
      {"lambda_hat_s_sd",
       Real([](C& c) -> double& { return c.sim.lambda_hat_s_sd; }, NonNeg,
            "lambda_hat_s_sd must be >= 0"),
       real_get([](const C& c) { return c.sim.lambda_hat_s_sd; })},
      {"prior_mean",
       Real([](C& c) -> double& { return c.sim.prior_mean; }, Prob,
            "prior_mean must lie in [0,1]"),
       real_get([](const C& c) { return c.sim.prior_mean; })},
      {"prior_sd",
       Real([](C& c) -> double& { return c.sim.prior_sd; }, NonNeg,
            "prior_sd must be >= 0"),
       real_get([](const C& c) { return c.sim.prior_sd; })},
      {"epsilon",
       Real([](C& c) -> double& { return c.sim.epsilon; }, Prob,
            "epsilon must lie in [0,1]"),
       real_get([](const C& c) { return c.sim.epsilon; })},
      {"delta",
       Real([](C& c) -> double& { return c.sim.delta; }, NonNeg,
            "delta must be >= 0"),
       real_get([](const C& c) { return c.sim.delta; })},
      {"p_incentivized",
       Real([](C& c) -> double& { return c.sim.p_incentivized; }, Prob,
            "p_incentivized must lie in [0,1]"),
       real_get([](const C& c) { return c.sim.p_incentivized; })},
      {"p_info_revealed",
       Real([](C& c) -> double& { return c.sim.p_info_revealed; }, Prob,
            "p_info_revealed must lie in [0,1]"),
       real_get([](const C& c) { return c.sim.p_info_revealed; })},
      {"info_price",
       Real([](C& c) -> double& { return c.sim.info_price; }, NonNeg,
            "info_price must be >= 0"),
       real_get([](const C& c) { return c.sim.info_price; })},
      {"demand_rounds",
       Int([](C& c) -> int& { return c.sim.demand_rounds; }, 0,
           "demand_rounds must be >= 0"),
       int_get([](const C& c) { return c.sim.demand_rounds; })},
      {"bootstrap_reps",
       Int([](C& c) -> int& { return c.bootstrap_reps; }, 1,
           "bootstrap_reps must be >= 1"),
       int_get([](const C& c) { return c.bootstrap_reps; })},
      {"topics_file",
       [](C& c, std::string_view v) -> std::optional<std::string> {
         if (v.empty()) return "topics_file must not be empty";
         c.topics_file = std::string(v);
         return std::nullopt;
       },
       [](const C& c) { return c.topics_file; }},
      {"seed",
       [](C& c, std::string_view v) -> std::optional<std::string> {
         std::uint64_t x = 0;
         const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
         if (v.empty() || res.ec != std::errc() || res.ptr != v.data() + v.size()) {
           return "seed must be an unsigned 64-bit integer";
         }
         c.seed = x;
         return std::nullopt;
       },
       [](const C& c) { return c.seed ? std::to_string(*c.seed) : std::string(); }},
  };
  return specs;
}

inline const KeySpec* FindKey(std::string_view name) {
  for (const auto& k : KeySpecs()) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

}  // namespace detail

// Parses scenario text. Unknown keys, duplicates, malformed lines and range
// violations are all collected; cross-key rules are checked once every line
// parsed. Throws ConfigParseError.
inline ScenarioConfig ParseConfig(std::string_view text) {
  ScenarioConfig cfg;
  std::vector<std::string> errors;
  std::map<std::string, int, std::less<>> seen;  // key -> line
  std::istringstream is{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto err = [&](int line, const std::string& what) {
    errors.push_back("line " + std::to_string(line) + ": " + what);
  };
  while (std::getline(is, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      err(line_no, "expected 'key = value'");
      continue;
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    const detail::KeySpec* spec = detail::FindKey(key);
    if (!spec) {
      err(line_no, "unknown key '" + key + "'");
      continue;
    }
    if (const auto it = seen.find(key); it != seen.end()) {
      err(line_no, "duplicate key '" + key + "' (first set on line " +
                       std::to_string(it->second) + ")");
      continue;
    }
    seen.emplace(key, line_no);
    if (auto e = spec->set(cfg, value)) err(line_no, *e);
  }

  auto line_of = [&](const std::string& k) {
    const auto it = seen.find(k);
    return it == seen.end() ? 0 : it->second;
  };
  const GameParams& g = cfg.sim.game;
  if (g.bias_hat_sender < g.bias_hat_receiver) {
    const int l = std::max(line_of("lambda_hat_s"), line_of("lambda_hat_r"));
    err(l, "lambda_hat_s must be >= lambda_hat_r (lambda_hat_s = " +
               FormatDouble(g.bias_hat_sender) + ", lambda_hat_r = " +
               FormatDouble(g.bias_hat_receiver) + ")");
  }
  const bool custom = g.off_path.kind == OffPathPolicy::Kind::kCustom;
  for (const char* k : {"off_path_h", "off_path_l"}) {
    if (custom && !seen.count(k)) {
      err(line_of("off_path"), std::string("missing required key '") + k +
                                   "' for off_path = custom");
    }
    if (!custom && seen.count(k)) {
      err(line_of(k), std::string(k) + " requires off_path = custom");
    }
  }
  if (!errors.empty()) throw ConfigParseError(std::move(errors));
  return cfg;
}

// Canonical text: every key in table order, so parsing it back yields an
// equal config. Off-path ratings and an unset seed or topics_file are
// omitted.
inline std::string SerializeConfig(const ScenarioConfig& cfg) {
  std::string out;
  const bool custom =
      cfg.sim.game.off_path.kind == OffPathPolicy::Kind::kCustom;
  for (const auto& k : detail::KeySpecs()) {
    if (!custom && (k.name == "off_path_h" || k.name == "off_path_l")) continue;
    if (k.name == "seed" && !cfg.seed) continue;
    if (k.name == "topics_file" && cfg.topics_file.empty()) continue;
    out += std::string(k.name) + " = " + k.get(cfg) + "\n";
  }
  return out;
}

// Applies `key=value` overrides from the command line with the same rules as
// the file. The cross-key checks run on the merged result.
inline ScenarioConfig ApplyOverrides(const ScenarioConfig& base,
                                     const std::vector<std::string>& sets) {
  std::string text = SerializeConfig(base);
  std::map<std::string, std::string> over;
  std::vector<std::string> errors;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      errors.push_back("--set " + s + ": expected key=value");
      continue;
    }
    const std::string key(Trim(std::string_view(s).substr(0, eq)));
    const detail::KeySpec* spec = detail::FindKey(key);
    if (!spec) {
      errors.push_back("--set " + s + ": unknown key '" + key + "'");
      continue;
    }
    const std::string value(Trim(std::string_view(s).substr(eq + 1)));
    ScenarioConfig scratch;
    if (auto e = spec->set(scratch, value)) {
      errors.push_back("--set " + s + ": " + *e);
      continue;
    }
    over[key] = value;
  }
  if (!errors.empty()) throw ConfigParseError(std::move(errors));
  std::string merged;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const std::string key(Trim(std::string_view(line).substr(0, line.find('='))));
    if (over.count(key)) continue;
    const bool drop_custom = over.count("off_path") && over["off_path"] == "full" &&
                             (key == "off_path_h" || key == "off_path_l");
    if (drop_custom) continue;
    merged += line + "\n";
  }
  for (const auto& [k, v] : over) merged += k + " = " + v + "\n";
  return ParseConfig(merged);
}

}  // namespace motivated

#endif  // MOTIVATED_CLI_CONFIG_HPP_
