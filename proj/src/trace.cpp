// Copyright 2026 The histk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "histk/trace.hpp"

#include "json.hpp"

namespace histk {

std::string_view to_string(CaseTaken c) {
  switch (c) {
    case CaseTaken::kNone: return "none";
    case CaseTaken::kHighDegree: return "high-degree";
    case CaseTaken::kComplete: return "complete";
    case CaseTaken::kSingleDominator: return "single-dominator";
    case CaseTaken::kOneDominator: return "one-dominator";
    case CaseTaken::kDominatorPath: return "dominator-path";
    case CaseTaken::kBalancedPair: return "balanced-pair";
    case CaseTaken::kSplitPair: return "split-pair";
    case CaseTaken::kProduct: return "product";
    case CaseTaken::kObstruction: return "obstruction";
  }
  return "unknown";
}

namespace {

void remap_all(std::vector<Vertex>& vs, std::span<const Vertex> to_host) {
  for (Vertex& v : vs) v = to_host[v];
}

nlohmann::ordered_json to_json(const ConstructionTrace& t) {
  nlohmann::ordered_json j;
  j["procedure"] = t.procedure;
  j["case"] = std::string(to_string(t.case_taken));
  if (!t.low_degree_set.empty()) j["low_degree_set"] = t.low_degree_set;
  if (!t.components.empty()) j["components"] = t.components;
  if (!t.dominating_set.empty()) j["dominating_set"] = t.dominating_set;
  if (!t.peel_log.empty()) {
    auto& arr = j["peel_log"] = nlohmann::ordered_json::array();
    for (const auto& p : t.peel_log) {
      nlohmann::ordered_json e;
      e["anchor"] = p.anchor;
      e["removed"] = p.removed;
      arr.push_back(std::move(e));
    }
  }
  if (!t.notes.empty()) j["notes"] = t.notes;
  if (!t.subcalls.empty()) {
    auto& arr = j["subcalls"] = nlohmann::ordered_json::array();
    for (const auto& s : t.subcalls) arr.push_back(to_json(s));
  }
  return j;
}

}  // namespace

void ConstructionTrace::remap(std::span<const Vertex> to_host) {
  remap_all(low_degree_set, to_host);
  for (auto& c : components) remap_all(c, to_host);
  remap_all(dominating_set, to_host);
  for (auto& p : peel_log) {
    p.anchor = to_host[p.anchor];
    remap_all(p.removed, to_host);
  }
  for (auto& s : subcalls) s.remap(to_host);
}

std::string trace_to_json(const ConstructionTrace& trace, int indent) { return to_json(trace).dump(indent); }

}  // namespace histk
