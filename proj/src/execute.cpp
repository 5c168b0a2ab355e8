// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/execute.hpp"

#include <omp.h>

#include "mcq/util/log.hpp"

namespace mcq {

Workset Workset::build(const std::vector<Item>& items, const LabelScheme& scheme,
                       const PromptTemplates& templates) {
  Workset w;
  for (const auto& item : items) {
    w.items.emplace(item.id, item);
    w.bundles.emplace(item.id, assemble_prompts(item, scheme, templates));
  }
  return w;
}

std::vector<MethodResult> ResultStore::ok_results() const {
  std::vector<MethodResult> out;
  for (const auto& u : units)
    if (u.ok) out.push_back(u.result);
  return out;
}

namespace {

UnitResult run_unit(const WorkUnit& unit, const Workset& workset, LmBackend& backend,
                    const RunParams& params) {
  UnitResult out;
  out.unit = unit;
  try {
    const Item& item = workset.items.at(unit.item_id);
    const PromptBundle& bundle = workset.bundles.at(unit.item_id);
    out.result = run_method(item, bundle, unit.kind, backend, params);
    out.ok = true;
  } catch (const std::exception& e) {
    out.ok = false;
    out.error = e.what();
  }
  return out;
}

}  // namespace

ResultStore execute_serial(const Plan& plan, const Workset& workset, LmBackend& backend,
                           const RunParams& params) {
  ResultStore store;
  store.units.resize(plan.units.size());
  for (size_t i = 0; i < plan.units.size(); ++i)
    store.units[i] = run_unit(plan.units[i], workset, backend, params);
  for (const auto& u : store.units) {
    if (!u.ok) {
      ++store.n_failed;
      MCQ_WARN("unit %s failed: %s", u.unit.id().c_str(), u.error.c_str());
    }
  }
  return store;
}

ResultStore execute_parallel(const Plan& plan, const Workset& workset, LmBackend& backend,
                             const RunParams& params, int threads) {
  ResultStore store;
  store.units.resize(plan.units.size());
  const int n_threads = threads > 0 ? threads : omp_get_max_threads();
  const int64_t n = static_cast<int64_t>(plan.units.size());
#pragma omp parallel for schedule(dynamic) num_threads(n_threads)
  for (int64_t i = 0; i < n; ++i) {
    // Exceptions stay within the iteration; run_unit captures them.
    store.units[i] = run_unit(plan.units[i], workset, backend, params);
  }
  for (const auto& u : store.units) {
    if (!u.ok) {
      ++store.n_failed;
      MCQ_WARN("unit %s failed: %s", u.unit.id().c_str(), u.error.c_str());
    }
  }
  return store;
}

}  // namespace mcq
