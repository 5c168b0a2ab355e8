// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_HTTP_BACKEND_HPP_
#define MCQ_HTTP_BACKEND_HPP_

#include <memory>
#include <string>

#include "mcq/backend.hpp"

namespace mcq {

// OpenAI-compatible REST backend.
//   conditional scoring: POST {base}/completions with echo + logprobs
//   generation:          POST {base}/chat/completions
//   embeddings:          POST {base}/embeddings
// Infill has no mapping onto plain completion APIs and is reported as a
// missing capability rather than approximated.
//
// Capabilities follow from which model names are configured. The API key is
// read from the environment variable named in the config and never stored.
// 429 and 5xx responses (and transport failures) are retried with
// exponential backoff, up to max_attempts total attempts.
struct HttpBackendConfig {
  std::string base_url;  // e.g. "https://api.openai.com/v1"
  std::string completion_model;
  std::string chat_model;
  std::string embedding_model;
  std::string api_key_env;
  int max_attempts = 3;
  int backoff_base_ms = 250;
  int max_in_flight = 4;
  double requests_per_second = 0.0;  // 0 = unlimited
  int timeout_s = 120;
};

std::shared_ptr<LmBackend> make_http_backend(const HttpBackendConfig& config);

}  // namespace mcq

#endif  // MCQ_HTTP_BACKEND_HPP_
