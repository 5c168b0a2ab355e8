// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_EXECUTE_HPP_
#define MCQ_EXECUTE_HPP_

#include <map>
#include <string>
#include <vector>

#include "mcq/backend.hpp"
#include "mcq/item.hpp"
#include "mcq/methods.hpp"
#include "mcq/plan.hpp"
#include "mcq/prompts.hpp"

namespace mcq {

// Items plus their assembled prompt bundles, keyed by id. Prompt assembly is
// pure, so this happens once before execution.
struct Workset {
  std::map<std::string, Item> items;
  std::map<std::string, PromptBundle> bundles;

  static Workset build(const std::vector<Item>& items, const LabelScheme& scheme,
                       const PromptTemplates& templates);
};

struct UnitResult {
  WorkUnit unit;
  bool ok = false;
  std::string error;
  MethodResult result;
};

struct ResultStore {
  std::vector<UnitResult> units;  // plan order
  int64_t n_failed = 0;

  // Results of successful units only; failed units stay out of every
  // accuracy denominator.
  std::vector<MethodResult> ok_results() const;
};

// Serial reference executor. One failed unit never aborts the run; it is
// recorded and skipped in downstream aggregation.
ResultStore execute_serial(const Plan& plan, const Workset& workset, LmBackend& backend,
                           const RunParams& params);

// OpenMP executor over the same work units; produces results identical to
// execute_serial. threads <= 0 uses all hardware threads.
ResultStore execute_parallel(const Plan& plan, const Workset& workset, LmBackend& backend,
                             const RunParams& params, int threads);

}  // namespace mcq

#endif  // MCQ_EXECUTE_HPP_
