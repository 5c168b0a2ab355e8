// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_REPORT_HPP_
#define MCQ_REPORT_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "mcq/execute.hpp"
#include "mcq/item.hpp"
#include "mcq/metrics.hpp"

namespace mcq {

// Run provenance shared by every emitted file.
struct RunInfo {
  std::string config_hash;
  std::string dataset_hash;
  std::string dataset_path;
  std::string backend_id;
  std::string backend_version;
  uint64_t seed = 0;
  int64_t cache_hits = 0;
  int64_t cache_misses = 0;
  int64_t n_units = 0;
  int64_t n_failed = 0;
  std::string started_at;   // ISO 8601 UTC
  std::string finished_at;
};

// Deterministic renderers. Every CSV starts with comment lines carrying the
// schema version and the config/dataset hashes.
std::string render_accuracy_csv(const std::vector<ConditionAccuracy>& rows, const RunInfo& info);
std::string render_fits_csv(const std::vector<FitResult>& fits, const RunInfo& info);
std::string render_robustness_json(const RobustnessReport& report, const RunInfo& info);
// One panel per condition, method-averaged bars, and one horizontal chance
// rule per condition (class="chance", data-condition, data-chance).
std::string render_accuracy_svg(const std::vector<ConditionAccuracy>& rows,
                                const std::vector<Item>& items);

void write_results_jsonl(const std::filesystem::path& path, const ResultStore& store);
ResultStore read_results_jsonl(const std::filesystem::path& path);

// Written to <outdir>/manifest.json via a temp file + rename.
void write_manifest(const std::filesystem::path& outdir, const RunInfo& info);
RunInfo read_manifest(const std::filesystem::path& outdir);

// Emits results.jsonl, accuracy_by_condition.csv, fits.csv, robustness.json,
// manifest.json and (optionally) accuracy.svg under outdir.
void write_reports(const std::filesystem::path& outdir, const ResultStore& store,
                   const std::vector<Item>& items, const RunInfo& info, bool emit_svg);

}  // namespace mcq

#endif  // MCQ_REPORT_HPP_
