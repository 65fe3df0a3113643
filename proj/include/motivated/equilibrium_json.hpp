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

#ifndef MOTIVATED_EQUILIBRIUM_JSON_HPP_
#define MOTIVATED_EQUILIBRIUM_JSON_HPP_

// JSON document for equilibrium listings (schema "motivated.equilibria/1"):
//
// {
//   "schema": "motivated.equilibria/1",
//   "params": {"prior", "tau", "gamma", "lambda", "lambda_hat_r",
//              "lambda_hat_s", "off_path": {"kind", "rating_msg_h",
//              "rating_msg_l"}},
//   "bne": [{"kind", "condition_slack", "conditions": [{"expr", "slack"}],
//            "strategies": {"sender", "receiver"}}],
//   "mixed_bne": [...],          // present only when lambda == 0
//   "me": [{"row", "conditions": [{"expr", "slack"}],
//           "strategies": {"receiver", "perceived_sender", "actual_sender"}}]
// }
//
// Slacks are in sender-utility units (see equilibrium.hpp). Senders are
// {"prob_msg_h_given_high", "prob_msg_h_given_low", "label"}; receivers are
// {"rating_msg_h", "rating_msg_l"}.

#include <json.hpp>

#include "motivated/equilibrium.hpp"

namespace motivated {

inline nlohmann::ordered_json ToJson(const OffPathPolicy& o) {
  nlohmann::ordered_json j;
  j["kind"] = o.kind == OffPathPolicy::Kind::kFullPunishment ? "full" : "custom";
  j["rating_msg_h"] = o.Rating(Message::kHigh);
  j["rating_msg_l"] = o.Rating(Message::kLow);
  return j;
}

inline nlohmann::ordered_json ToJson(const GameParams& p) {
  nlohmann::ordered_json j;
  j["prior"] = p.prior;
  j["tau"] = p.honesty_weight;
  j["gamma"] = p.rating_weight;
  j["lambda"] = p.bias_true;
  j["lambda_hat_r"] = p.bias_hat_receiver;
  j["lambda_hat_s"] = p.bias_hat_sender;
  j["off_path"] = ToJson(p.off_path);
  return j;
}

inline nlohmann::ordered_json ToJson(const SenderStrategy& s) {
  nlohmann::ordered_json j;
  j["prob_msg_h_given_high"] = s.prob_msg_h_given_high;
  j["prob_msg_h_given_low"] = s.prob_msg_h_given_low;
  j["label"] = ToString(s);
  return j;
}

inline nlohmann::ordered_json ToJson(const ReceiverStrategy& r) {
  nlohmann::ordered_json j;
  j["rating_msg_h"] = r.rating_msg_h;
  j["rating_msg_l"] = r.rating_msg_l;
  return j;
}

inline nlohmann::ordered_json ToJson(const std::vector<Condition>& cs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cs) {
    nlohmann::ordered_json j;
    j["expr"] = c.expr;
    j["slack"] = c.slack;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline nlohmann::ordered_json ToJson(const PureBne& b) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(ToString(b.kind));
  j["condition_slack"] = b.condition_slack;
  j["conditions"] = ToJson(b.conditions);
  j["strategies"]["sender"] = ToJson(b.sender);
  j["strategies"]["receiver"] = ToJson(b.receiver);
  return j;
}

inline nlohmann::ordered_json ToJson(const MixedBne& m) {
  nlohmann::ordered_json j;
  j["kind"] = m.kind == MixedBneKind::kMixTruthfulLowState
                  ? "mix_truthful_low_state"
                  : "mix_truthful_high_state";
  j["mix_prob"] = m.mix_prob;
  j["indifference_gap"] = m.indifference_gap;
  j["strategies"]["sender"] = ToJson(m.sender);
  j["strategies"]["receiver"] = ToJson(m.receiver);
  return j;
}

inline nlohmann::ordered_json ToJson(const MotivatedEquilibrium& me) {
  nlohmann::ordered_json j;
  j["row"] = me.row;
  j["conditions"] = ToJson(me.conditions);
  j["strategies"]["receiver"] = ToJson(me.receiver);
  j["strategies"]["perceived_sender"] = ToJson(me.perceived_sender);
  j["strategies"]["actual_sender"] = ToJson(me.actual_sender);
  return j;
}

inline nlohmann::ordered_json EquilibriaDocument(const GameParams& p) {
  nlohmann::ordered_json doc;
  doc["schema"] = "motivated.equilibria/1";
  doc["params"] = ToJson(p);
  doc["bne"] = nlohmann::ordered_json::array();
  for (const auto& b : EnumeratePureBne(p)) doc["bne"].push_back(ToJson(b));
  if (p.bias_true == 0.0) {
    doc["mixed_bne"] = nlohmann::ordered_json::array();
    for (const auto& m :
         MixedBneList(p.prior, p.honesty_weight, p.rating_weight)) {
      doc["mixed_bne"].push_back(ToJson(m));
    }
  }
  doc["me"] = nlohmann::ordered_json::array();
  for (const auto& me : EnumerateMe(p)) doc["me"].push_back(ToJson(me));
  return doc;
}

}  // namespace motivated

#endif  // MOTIVATED_EQUILIBRIUM_JSON_HPP_
