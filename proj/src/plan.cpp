// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/plan.hpp"

#include <algorithm>

namespace mcq {

namespace {

const char* missing_capability(Method m, const BackendCapabilities& caps) {
  switch (m) {
    case Method::StringScoring:
    case Method::LabelScoring:
    case Method::Rating:
      return caps.conditional_scoring ? nullptr : "capability: conditional_scoring";
    case Method::EmbeddingSimilarity:
      return caps.embeddings ? nullptr : "capability: embeddings";
    case Method::FreeGeneration:
      return caps.generation ? nullptr : "capability: generation";
  }
  return nullptr;
}

}  // namespace

Plan make_plan(const RunConfig& config, const std::vector<Item>& items,
               const BackendCapabilities& caps) {
  Plan plan;
  for (const auto& item : items) {
    for (Method m : config.methods) {
      const char* reason = missing_capability(m, caps);
      for (const auto& kind : score_kinds_for(m, config.rating_concepts)) {
        WorkUnit unit{item.id, kind};
        if (reason) plan.rejected.push_back({std::move(unit), reason});
        else plan.units.push_back(std::move(unit));
      }
    }
  }
  auto order = [](const WorkUnit& a, const WorkUnit& b) {
    return std::tuple(a.item_id, a.method(), a.kind.name()) <
           std::tuple(b.item_id, b.method(), b.kind.name());
  };
  std::sort(plan.units.begin(), plan.units.end(), order);
  std::sort(plan.rejected.begin(), plan.rejected.end(),
            [&](const RejectedUnit& a, const RejectedUnit& b) { return order(a.unit, b.unit); });
  if (plan.units.empty()) throw ConfigError("no feasible work units");
  return plan;
}

}  // namespace mcq
