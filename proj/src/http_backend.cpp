// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/http_backend.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "httplib.h"
#include "nlohmann/json.hpp"

#include "mcq/util/limiter.hpp"
#include "mcq/util/log.hpp"

namespace mcq {

using nlohmann::json;

namespace {

struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string prefix;  // path prefix, no trailing slash
};

ParsedUrl parse_base_url(const std::string& base_url) {
  auto scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos)
    throw ConfigError("backend base_url must include a scheme: " + base_url);
  auto path_start = base_url.find('/', scheme_end + 3);
  ParsedUrl out;
  if (path_start == std::string::npos) {
    out.origin = base_url;
  } else {
    out.origin = base_url.substr(0, path_start);
    out.prefix = base_url.substr(path_start);
    while (!out.prefix.empty() && out.prefix.back() == '/') out.prefix.pop_back();
  }
  return out;
}

bool retryable_status(int status) { return status == 429 || (status >= 500 && status < 600); }

class HttpBackend final : public LmBackend {
public:
  explicit HttpBackend(const HttpBackendConfig& config)
      : config_(config), url_(parse_base_url(config.base_url)),
        in_flight_(config.max_in_flight > 0 ? config.max_in_flight : 1),
        bucket_(config.requests_per_second) {
    if (config_.base_url.empty()) throw ConfigError("http backend: base_url is required");
    if (config_.max_attempts < 1) throw ConfigError("http backend: max_attempts must be >= 1");
    if (!config_.api_key_env.empty()) {
      const char* key = std::getenv(config_.api_key_env.c_str());
      if (!key || !*key)
        throw ConfigError("http backend: environment variable '" + config_.api_key_env +
                          "' is not set");
      api_key_ = key;
    }
  }

  std::string id() const override { return "openai-compat:" + config_.base_url; }

  std::string version() const override {
    return config_.completion_model + "|" + config_.chat_model + "|" + config_.embedding_model;
  }

  BackendCapabilities capabilities() const override {
    BackendCapabilities caps;
    caps.conditional_scoring = !config_.completion_model.empty();
    caps.generation = !config_.chat_model.empty();
    caps.embeddings = !config_.embedding_model.empty();
    caps.infill_scoring = false;
    return caps;
  }

  std::vector<TokenScore> score_continuation(const std::string& prompt,
                                             const std::string& continuation) override {
    if (config_.completion_model.empty())
      throw CapabilityError(id() + ": capability: conditional_scoring");
    if (continuation.empty())
      throw std::invalid_argument("score_continuation: empty continuation");

    const std::string full = prompt + continuation;
    json body{{"echo", true},
              {"logprobs", 1},
              {"max_tokens", 0},
              {"model", config_.completion_model},
              {"prompt", full},
              {"temperature", 0.0}};
    json resp = post_json("/completions", body);

    const json* lp = nullptr;
    try {
      lp = &resp.at("choices").at(0).at("logprobs");
    } catch (const json::exception&) {
      throw BackendError("completions: provider returned no logprobs");
    }
    if (lp->is_null()) throw BackendError("completions: provider returned no logprobs");
    const auto& tokens = lp->at("tokens");
    const auto& token_logprobs = lp->at("token_logprobs");
    const auto& offsets = lp->at("text_offset");
    if (tokens.size() != token_logprobs.size() || tokens.size() != offsets.size())
      throw BackendError("completions: inconsistent logprob arrays");

    const size_t boundary = prompt.size();
    std::vector<TokenScore> out;
    for (size_t i = 0; i < tokens.size(); ++i) {
      const std::string text = tokens[i].get<std::string>();
      const size_t begin = offsets[i].get<size_t>();
      const size_t end = begin + text.size();
      if (end <= boundary) continue;  // prompt-side token
      if (token_logprobs[i].is_null())
        throw BackendError("completions: provider returned no logprob for token '" + text + "'");
      TokenScore ts;
      ts.token_text = text;
      ts.logprob = token_logprobs[i].get<double>();
      ts.span_begin = begin > boundary ? begin - boundary : 0;
      ts.span_end = std::min(end, full.size()) - boundary;
      out.push_back(std::move(ts));
    }
    if (out.empty()) throw BackendError("completions: no tokens attributed to the continuation");
    return out;
  }

  std::string generate(const std::string& prompt, const GenerationParams& params) override {
    if (config_.chat_model.empty()) throw CapabilityError(id() + ": capability: generation");
    json body{{"max_tokens", params.max_tokens},
              {"messages", json::array({json{{"content", prompt}, {"role", "user"}}})},
              {"model", config_.chat_model},
              {"seed", params.seed},
              {"temperature", params.temperature}};
    json resp = post_json("/chat/completions", body);
    try {
      const auto& message = resp.at("choices").at(0).at("message");
      if (!message.contains("content") || message.at("content").is_null()) return "";
      return message.at("content").get<std::string>();
    } catch (const json::exception&) {
      // Provider-side refusal surfaces as an empty generation, not a crash.
      return "";
    }
  }

  Embedding embed(const std::string& text) override {
    if (config_.embedding_model.empty())
      throw CapabilityError(id() + ": capability: embeddings");
    json body{{"input", text}, {"model", config_.embedding_model}};
    json resp = post_json("/embeddings", body);
    Embedding v;
    try {
      v = resp.at("data").at(0).at("embedding").get<Embedding>();
    } catch (const json::exception& e) {
      throw BackendError(std::string("embeddings: bad response: ") + e.what());
    }
    for (double x : v)
      if (!std::isfinite(x)) throw BackendError("embeddings: non-finite entry");
    {
      std::lock_guard lock(dim_mutex_);
      if (embedding_dim_ == 0) embedding_dim_ = v.size();
      else if (v.size() != embedding_dim_)
        throw BackendError("embeddings: dimension changed mid-run (" +
                           std::to_string(v.size()) + " vs " + std::to_string(embedding_dim_) +
                           ")");
    }
    return v;
  }

private:
  json post_json(const std::string& endpoint, const json& body) {
    const std::string path = url_.prefix + endpoint;
    const std::string payload = body.dump();
    httplib::Headers headers;
    if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

    SemaphoreGuard guard(in_flight_);
    std::string last_error;
    for (int attempt = 1; attempt <= config_.max_attempts; ++attempt) {
      if (attempt > 1) {
        auto delay = std::chrono::milliseconds(config_.backoff_base_ms) * (1 << (attempt - 2));
        std::this_thread::sleep_for(delay);
      }
      bucket_.acquire();
      httplib::Client client(url_.origin);
      client.set_connection_timeout(config_.timeout_s, 0);
      client.set_read_timeout(config_.timeout_s, 0);
      client.set_write_timeout(config_.timeout_s, 0);
      auto res = client.Post(path, headers, payload, "application/json");
      if (!res) {
        last_error = "transport: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status >= 200 && res->status < 300) {
        json parsed = json::parse(res->body, nullptr, false);
        if (parsed.is_discarded())
          throw BackendError(endpoint + ": response is not valid JSON");
        return parsed;
      }
      last_error = "HTTP " + std::to_string(res->status) + ": " + res->body;
      if (!retryable_status(res->status)) throw BackendError(endpoint + ": " + last_error);
      MCQ_WARN("%s attempt %d/%d failed (%s)", endpoint.c_str(), attempt, config_.max_attempts,
               last_error.c_str());
    }
    throw BackendError(endpoint + ": giving up after " + std::to_string(config_.max_attempts) +
                       " attempts; last error: " + last_error);
  }

  HttpBackendConfig config_;
  ParsedUrl url_;
  std::string api_key_;
  Semaphore in_flight_;
  TokenBucket bucket_;
  std::mutex dim_mutex_;
  size_t embedding_dim_ = 0;
};

}  // namespace

std::shared_ptr<LmBackend> make_http_backend(const HttpBackendConfig& config) {
  return std::make_shared<HttpBackend>(config);
}

}  // namespace mcq
