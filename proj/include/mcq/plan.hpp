// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_PLAN_HPP_
#define MCQ_PLAN_HPP_

#include <string>
#include <vector>

#include "mcq/backend.hpp"
#include "mcq/config.hpp"
#include "mcq/item.hpp"
#include "mcq/methods.hpp"

namespace mcq {

struct WorkUnit {
  std::string item_id;
  ScoreKind kind;

  std::string method() const { return method_name(method_of(kind.kind)); }
  std::string id() const { return item_id + "|" + method() + "|" + kind.name(); }
};

struct RejectedUnit {
  WorkUnit unit;
  std::string reason;
};

struct Plan {
  std::vector<WorkUnit> units;       // deterministic (item id, method, score) order
  std::vector<RejectedUnit> rejected;
};

// Expands the config's method grid over the dataset; units whose capability
// requirement the backend cannot meet are rejected up front with a reason.
// Throws ConfigError when nothing feasible remains.
Plan make_plan(const RunConfig& config, const std::vector<Item>& items,
               const BackendCapabilities& caps);

}  // namespace mcq

#endif  // MCQ_PLAN_HPP_
