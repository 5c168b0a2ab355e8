// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mcq/trigram_lm.hpp"
#include "mcq/util/hash.hpp"
#include "mcq/util/toml.hpp"

namespace mcq {

RunParams RunConfig::run_params() const {
  RunParams p;
  p.generation = generation;
  p.seeds = generation_seeds;
  p.f1_threshold = f1_threshold;
  p.rating_labels = rating_labels;
  return p;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  toml::Table t = toml::Table::parse_file(path);
  const std::filesystem::path base = path.has_parent_path()
                                         ? path.parent_path()
                                         : std::filesystem::path(".");
  auto resolve = [&](const std::string& p) -> std::filesystem::path {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : base / fp;
  };

  RunConfig c;
  c.config_path = path;
  c.config_hash = sha256_file_hex(path);

  std::string version = t.get_string("schema_version", "1");
  if (version != "1")
    throw ConfigError(path.string() + ": unsupported config schema_version '" + version + "'");

  c.dataset_path = resolve(t.get_string("dataset.path"));
  c.dataset_schema_version = t.get_string("dataset.schema_version", "1");

  c.backend_kind = t.get_string("backend.kind");
  if (c.backend_kind == "toy") {
    c.toy_corpus_path = resolve(t.get_string("backend.corpus"));
  } else if (c.backend_kind == "http") {
    c.http.base_url = t.get_string("http.base_url");
    c.http.completion_model = t.get_string("http.completion_model", "");
    c.http.chat_model = t.get_string("http.chat_model", "");
    c.http.embedding_model = t.get_string("http.embedding_model", "");
    c.http.api_key_env = t.get_string("http.api_key_env", "");
    c.http.max_attempts = static_cast<int>(t.get_int("http.max_attempts", 3));
    c.http.backoff_base_ms = static_cast<int>(t.get_int("http.backoff_ms", 250));
    c.http.max_in_flight = static_cast<int>(t.get_int("http.max_in_flight", 4));
    c.http.requests_per_second = t.get_float("http.requests_per_second", 0.0);
    c.http.timeout_s = static_cast<int>(t.get_int("http.timeout_s", 120));
    if (c.http.completion_model.empty() && c.http.chat_model.empty() &&
        c.http.embedding_model.empty())
      throw ConfigError(path.string() + ": http backend needs at least one model name");
  } else {
    throw ConfigError(path.string() + ": unknown backend.kind '" + c.backend_kind +
                      "' (want toy or http)");
  }

  std::vector<std::string> method_names = t.get_string_array("run.methods");
  if (method_names.empty()) throw ConfigError(path.string() + ": run.methods is empty");
  std::set<std::string> seen;
  for (const auto& name : method_names) {
    if (!seen.insert(name).second)
      throw ConfigError(path.string() + ": duplicate method '" + name + "'");
    c.methods.push_back(method_from_string(name));
  }

  c.seed = static_cast<uint64_t>(t.get_int("run.seed", 1));
  c.threads = static_cast<int>(t.get_int("run.threads", 1));
  if (c.threads < 0) throw ConfigError(path.string() + ": run.threads must be >= 0");
  if (t.has("run.output_dir")) c.output_dir = resolve(t.get_string("run.output_dir"));
  c.emit_svg = t.get_bool("run.emit_svg", false);

  c.generation.temperature = t.get_float("generation.temperature", 0.1);
  if (!(c.generation.temperature > 0.0))
    throw ConfigError(path.string() + ": generation.temperature must be > 0");
  c.generation.max_tokens = static_cast<int>(t.get_int("generation.max_tokens", 50));
  if (c.generation.max_tokens <= 0)
    throw ConfigError(path.string() + ": generation.max_tokens must be positive");
  c.generation_seeds = t.get_int_array("generation.seeds", c.generation_seeds);
  if (c.generation_seeds.empty())
    throw ConfigError(path.string() + ": generation.seeds is empty");

  c.rating_concepts = t.get_string_array("rating.concepts", c.rating_concepts);
  if (c.rating_concepts.empty())
    throw ConfigError(path.string() + ": rating.concepts is empty");
  auto labels = t.get_string_array("rating.labels", {c.rating_labels.begin(),
                                                     c.rating_labels.end()});
  if (labels.size() != 5)
    throw ConfigError(path.string() + ": rating.labels must name exactly 5 points");
  std::copy(labels.begin(), labels.end(), c.rating_labels.begin());

  c.label_scheme.kind = label_kind_from_string(
      t.get_string("labels.scheme", "uppercase_letters"));

  c.f1_threshold = t.get_float("classify.f1_threshold", 0.5);
  if (!(c.f1_threshold > 0.0 && c.f1_threshold <= 1.0))
    throw ConfigError(path.string() + ": classify.f1_threshold must be in (0, 1]");

  if (t.has("cache.path")) c.cache_path = resolve(t.get_string("cache.path"));

  if (t.has("templates.path"))
    c.templates = PromptTemplates::load_file(resolve(t.get_string("templates.path")));
  c.templates.rating_concepts = c.rating_concepts;

  return c;
}

std::shared_ptr<LmBackend> make_backend(const RunConfig& config) {
  if (config.backend_kind == "toy") {
    std::ifstream in(config.toy_corpus_path);
    if (!in)
      throw ConfigError("cannot open toy corpus: " + config.toy_corpus_path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::make_shared<TrigramLm>(TrigramLm::from_corpus(ss.str()));
  }
  return make_http_backend(config.http);
}

}  // namespace mcq
