// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_BACKEND_HPP_
#define MCQ_BACKEND_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mcq/util/errors.hpp"

namespace mcq {

struct BackendCapabilities {
  bool conditional_scoring = false;
  bool infill_scoring = false;
  bool generation = false;
  bool embeddings = false;
};

// One scored continuation token. `logprob` is a natural log; the span is a
// half-open byte range into the continuation string. A token straddling the
// prompt/continuation boundary belongs to the continuation with its span
// clipped to the continuation side.
struct TokenScore {
  std::string token_text;
  double logprob = 0.0;
  size_t span_begin = 0;
  size_t span_end = 0;
};

struct GenerationParams {
  double temperature = 0.1;
  int max_tokens = 50;
  int64_t seed = 1;
};

using Embedding = std::vector<double>;

// Uniform contract over language-model capabilities. Implementations must be
// safe to share across concurrent workers. Operations on a missing
// capability throw CapabilityError before any I/O.
class LmBackend {
public:
  virtual ~LmBackend() = default;

  virtual std::string id() const = 0;
  virtual std::string version() const = 0;
  virtual BackendCapabilities capabilities() const = 0;

  virtual std::vector<TokenScore> score_continuation(const std::string& prompt,
                                                     const std::string& continuation) {
    (void)prompt;
    (void)continuation;
    throw CapabilityError(id() + ": capability: conditional_scoring");
  }

  virtual double score_infill(const std::string& prefix, const std::string& suffix,
                              const std::string& infill) {
    (void)prefix;
    (void)suffix;
    (void)infill;
    throw CapabilityError(id() + ": capability: infill_scoring");
  }

  virtual std::string generate(const std::string& prompt, const GenerationParams& params) {
    (void)prompt;
    (void)params;
    throw CapabilityError(id() + ": capability: generation");
  }

  virtual Embedding embed(const std::string& text) {
    (void)text;
    throw CapabilityError(id() + ": capability: embeddings");
  }
};

// Sum of token logprobs, the total log P(continuation | prompt).
double total_logprob(const std::vector<TokenScore>& scores);

}  // namespace mcq

#endif  // MCQ_BACKEND_HPP_
