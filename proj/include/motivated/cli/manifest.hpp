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

#ifndef MOTIVATED_CLI_MANIFEST_HPP_
#define MOTIVATED_CLI_MANIFEST_HPP_

// Run manifest written next to every output as <out>.manifest.json. It holds
// no timestamps or host data, so identical inputs give identical bytes.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace motivated {

inline constexpr std::string_view kToolName = "motivated";
inline constexpr std::string_view kToolVersion = "1.0.0";

// 64-bit FNV-1a.
inline constexpr std::uint64_t Fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string HexDigest(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct RunManifest {
  std::string tool{kToolName};
  std::string version{kToolVersion};
  std::string command;
  std::string config_hash;  // FNV-1a of the canonical config plus arguments
  std::optional<std::uint64_t> seed;
  std::vector<std::string> outputs;

  nlohmann::ordered_json ToJson() const {
    nlohmann::ordered_json j;
    j["tool"] = tool;
    j["version"] = version;
    j["command"] = command;
    j["config_hash"] = config_hash;
    j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json();
    j["outputs"] = outputs;
    return j;
  }
};

inline RunManifest MakeManifest(std::string command, std::string_view canonical_input,
                                std::optional<std::uint64_t> seed,
                                std::vector<std::string> outputs) {
  RunManifest m;
  m.command = std::move(command);
  m.config_hash = HexDigest(Fnv1a64(canonical_input));
  m.seed = seed;
  m.outputs = std::move(outputs);
  return m;
}

}  // namespace motivated

#endif  // MOTIVATED_CLI_MANIFEST_HPP_
