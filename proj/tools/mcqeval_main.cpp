// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0
//
// mcqeval: run a multiple-choice evaluation grid, validate datasets,
// inspect run plans, and rebuild reports from stored results.
//
// Exit codes: 0 success, 1 completed with failed work units, 2 config or
// validation error.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <exception>
#include <memory>

#include "CLI11.hpp"

#include "mcq/cache.hpp"
#include "mcq/config.hpp"
#include "mcq/dataset.hpp"
#include "mcq/execute.hpp"
#include "mcq/plan.hpp"
#include "mcq/report.hpp"
#include "mcq/util/hash.hpp"
#include "mcq/version.hpp"

namespace {

std::string now_iso8601() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int cmd_run(const std::string& config_path, const std::string& output_override,
            int threads_override) {
  mcq::RunConfig config = mcq::load_run_config(config_path);
  if (!output_override.empty()) config.output_dir = output_override;
  if (config.output_dir.empty())
    throw mcq::ConfigError("no output directory (set [run].output_dir or --output-dir)");
  if (threads_override >= 0) config.threads = threads_override;

  std::vector<mcq::Item> items =
      mcq::load_dataset(config.dataset_path, config.dataset_schema_version);

  std::shared_ptr<mcq::LmBackend> backend = mcq::make_backend(config);
  std::shared_ptr<mcq::ResponseCache> cache;
  if (!config.cache_path.empty()) {
    cache = std::make_shared<mcq::ResponseCache>(config.cache_path);
    backend = mcq::cached(backend, cache);
  }

  mcq::Plan plan = mcq::make_plan(config, items, backend->capabilities());
  for (const auto& rejected : plan.rejected)
    std::fprintf(stderr, "[plan] rejected %s (%s)\n", rejected.unit.id().c_str(),
                 rejected.reason.c_str());
  std::fprintf(stderr, "[plan] %zu work units (%zu rejected)\n", plan.units.size(),
               plan.rejected.size());

  mcq::RunInfo info;
  info.config_hash = config.config_hash;
  info.dataset_hash = mcq::sha256_file_hex(config.dataset_path);
  info.dataset_path = std::filesystem::absolute(config.dataset_path).string();
  info.backend_id = backend->id();
  info.backend_version = backend->version();
  info.seed = config.seed;
  info.started_at = now_iso8601();

  mcq::Workset workset = mcq::Workset::build(items, config.label_scheme, config.templates);
  mcq::ResultStore store =
      config.threads == 1
          ? mcq::execute_serial(plan, workset, *backend, config.run_params())
          : mcq::execute_parallel(plan, workset, *backend, config.run_params(), config.threads);

  info.finished_at = now_iso8601();
  info.n_units = static_cast<int64_t>(store.units.size());
  info.n_failed = store.n_failed;
  if (cache) {
    info.cache_hits = cache->hits();
    info.cache_misses = cache->misses();
  }

  mcq::write_reports(config.output_dir, store, items, info, config.emit_svg);
  std::fprintf(stderr, "[run] %lld/%zu units ok; reports in %s\n",
               static_cast<long long>(info.n_units - info.n_failed), store.units.size(),
               config.output_dir.string().c_str());
  return store.n_failed > 0 ? 1 : 0;
}

int cmd_validate(const std::string& dataset_path) {
  std::vector<mcq::Item> items = mcq::load_dataset(dataset_path);
  std::printf("dataset ok: %zu items, %zu conditions\n", items.size(),
              mcq::condition_names(items).size());
  for (const auto& condition : mcq::condition_names(items)) {
    auto of_condition = mcq::items_of_condition(items, condition);
    std::printf("  %-20s %3zu items, chance accuracy %s\n", condition.c_str(),
                of_condition.size(), mcq::chance_accuracy(of_condition).str().c_str());
  }
  return 0;
}

int cmd_plan(const std::string& config_path) {
  mcq::RunConfig config = mcq::load_run_config(config_path);
  std::vector<mcq::Item> items =
      mcq::load_dataset(config.dataset_path, config.dataset_schema_version);
  std::shared_ptr<mcq::LmBackend> backend = mcq::make_backend(config);
  mcq::Plan plan = mcq::make_plan(config, items, backend->capabilities());
  for (const auto& unit : plan.units) std::printf("%s\n", unit.id().c_str());
  for (const auto& rejected : plan.rejected)
    std::printf("REJECTED %s (%s)\n", rejected.unit.id().c_str(), rejected.reason.c_str());
  std::printf("# %zu units, %zu rejected\n", plan.units.size(), plan.rejected.size());
  return 0;
}

int cmd_report(const std::string& results_dir) {
  mcq::RunInfo info = mcq::read_manifest(results_dir);
  std::vector<mcq::Item> items = mcq::load_dataset(info.dataset_path);
  const std::string hash = mcq::sha256_file_hex(info.dataset_path);
  if (hash != info.dataset_hash)
    throw mcq::ValidationError("dataset at " + info.dataset_path +
                               " does not match the manifest hash");
  mcq::ResultStore store =
      mcq::read_results_jsonl(std::filesystem::path(results_dir) / "results.jsonl");
  mcq::write_reports(results_dir, store, items, info, /*emit_svg=*/true);
  std::fprintf(stderr, "[report] rebuilt reports in %s\n", results_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiple-choice answer-selection evaluation harness"};
  app.set_version_flag("--version", std::string(mcq::kSoftwareName) + " " + mcq::kSoftwareVersion);
  app.require_subcommand(1);

  std::string config_path, dataset_path, results_dir, output_override;
  int threads_override = -1;
  bool dry_run = false;

  auto* run = app.add_subcommand("run", "execute a full evaluation run");
  run->add_option("config", config_path, "run config (TOML)")->required();
  run->add_option("--output-dir", output_override, "override [run].output_dir");
  run->add_option("--threads", threads_override, "override [run].threads (0 = all cores)");

  auto* validate = app.add_subcommand("validate", "validate a dataset file");
  validate->add_option("dataset", dataset_path, "dataset (JSONL)")->required();

  auto* plan = app.add_subcommand("plan", "print the work-unit plan without executing");
  plan->add_option("config", config_path, "run config (TOML)")->required();
  plan->add_flag("--dry-run", dry_run, "plan only (always on; flag kept for scripts)");

  auto* report = app.add_subcommand("report", "rebuild reports from a results directory");
  report->add_option("results-dir", results_dir, "directory with manifest.json + results.jsonl")
      ->required();

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(config_path, output_override, threads_override);
    if (validate->parsed()) return cmd_validate(dataset_path);
    if (plan->parsed()) return cmd_plan(config_path);
    if (report->parsed()) return cmd_report(results_dir);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const mcq::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const mcq::ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
