// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_TRIGRAM_LM_HPP_
#define MCQ_TRIGRAM_LM_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcq/backend.hpp"

namespace mcq {

// Deterministic word-level trigram LM with add-1 (Laplace) smoothing over a
// closed vocabulary plus an unknown-word type. Tokenization is lowercasing +
// whitespace splitting; punctuation stays attached to words. The model is
// immutable after construction and exposes its probability table, so tests
// can enumerate exact expected values.
//
// The distribution over the next token given any two-word context covers
// vocabulary words, <unk>, and </s>, and sums to 1 exactly by construction.
class TrigramLm final : public LmBackend {
public:
  static constexpr const char* kBos = "<s>";
  static constexpr const char* kEos = "</s>";
  static constexpr const char* kUnk = "<unk>";
  static constexpr size_t kEmbeddingDim = 64;

  struct Token {
    std::string word;
    size_t begin = 0;  // byte span in the original text
    size_t end = 0;
  };

  static std::vector<Token> tokenize(const std::string& text);

  // Counts trigrams over each non-empty line, padded <s> <s> ... </s>.
  static TrigramLm from_corpus(const std::string& corpus_text);

  // Explicit tables: keys are (u, v, w) with u/v drawn from vocabulary words,
  // <s> or <unk>, and w from vocabulary words, </s> or <unk>. Words absent
  // from `vocabulary` are rejected.
  static TrigramLm from_counts(std::vector<std::string> vocabulary,
                               const std::map<std::array<std::string, 3>, int64_t>& counts);

  std::string id() const override { return "toy-trigram"; }
  std::string version() const override { return version_; }
  BackendCapabilities capabilities() const override {
    return BackendCapabilities{true, true, true, true};
  }

  std::vector<TokenScore> score_continuation(const std::string& prompt,
                                             const std::string& continuation) override;
  double score_infill(const std::string& prefix, const std::string& suffix,
                      const std::string& infill) override;
  std::string generate(const std::string& prompt, const GenerationParams& params) override;
  Embedding embed(const std::string& text) override;

  // Smoothed log P(w | u v). Words are matched lowercased; out-of-vocabulary
  // words fall back to <unk>.
  double token_logprob(const std::string& u, const std::string& v, const std::string& w) const;

  // Sorted vocabulary words (specials excluded).
  const std::vector<std::string>& vocabulary_words() const { return words_; }
  // Distribution support size: |words| + <unk> + </s>.
  size_t support_size() const { return words_.size() + 2; }

  // Full next-token distribution over the support, for normalization checks.
  std::vector<std::pair<std::string, double>> next_token_distribution(const std::string& u,
                                                                      const std::string& v) const;

private:
  TrigramLm() = default;
  void finalize();  // builds version hash

  int32_t word_id(const std::string& w) const;      // predicted-position id
  int32_t context_id(const std::string& w) const;   // context-position id
  double logprob_ids(int32_t u, int32_t v, int32_t w) const;
  uint64_t context_key(int32_t u, int32_t v) const;

  // Exact single-word infill: log of f(w) / sum over vocabulary words of
  // f(w'), where f collects the chain factors whose trigram windows touch
  // the infill position.
  double single_infill_logprob(const std::vector<std::string>& left, const std::string& word,
                               const std::vector<std::string>& right) const;

  struct ContextRow {
    std::unordered_map<int32_t, int64_t> counts;
    int64_t total = 0;
  };

  std::vector<std::string> words_;              // sorted
  std::map<std::string, int32_t> word_ids_;
  std::unordered_map<uint64_t, ContextRow> table_;
  int32_t unk_id_ = 0, eos_id_ = 0, bos_id_ = 0;
  std::string version_;
};

}  // namespace mcq

#endif  // MCQ_TRIGRAM_LM_HPP_
