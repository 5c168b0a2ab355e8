// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_CONFIG_HPP_
#define MCQ_CONFIG_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "mcq/backend.hpp"
#include "mcq/http_backend.hpp"
#include "mcq/item.hpp"
#include "mcq/methods.hpp"
#include "mcq/prompts.hpp"

namespace mcq {

// A whole run, parsed from one TOML-style file. Relative paths are resolved
// against the config file's directory. Secrets enter only through the
// environment variable named in [http].api_key_env.
struct RunConfig {
  std::filesystem::path config_path;
  std::string config_hash;  // sha256 of the config file bytes

  std::filesystem::path dataset_path;
  std::string dataset_schema_version = "1";

  std::string backend_kind;  // "toy" or "http"
  std::filesystem::path toy_corpus_path;
  HttpBackendConfig http;

  std::vector<Method> methods;
  uint64_t seed = 1;
  int threads = 1;  // 0 = all hardware threads
  std::filesystem::path output_dir;
  bool emit_svg = false;

  GenerationParams generation;  // free-generation temperature and cap
  std::vector<int64_t> generation_seeds{1, 2, 3, 4, 5};

  std::vector<std::string> rating_concepts{"likely", "appropriate", "plausible", "possible"};
  std::array<std::string, 5> rating_labels{"1", "2", "3", "4", "5"};

  LabelScheme label_scheme;
  double f1_threshold = 0.5;

  std::filesystem::path cache_path;  // empty = no cache

  PromptTemplates templates;

  RunParams run_params() const;
};

RunConfig load_run_config(const std::filesystem::path& path);

// Instantiates the configured backend (without the cache wrapper).
std::shared_ptr<LmBackend> make_backend(const RunConfig& config);

}  // namespace mcq

#endif  // MCQ_CONFIG_HPP_
