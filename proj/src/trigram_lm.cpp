// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/trigram_lm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "mcq/util/hash.hpp"
#include "mcq/util/strings.hpp"

namespace mcq {

std::vector<TrigramLm::Token> TrigramLm::tokenize(const std::string& text) {
  std::vector<Token> out;
  for (const auto& sw : split_ws_spans(text))
    out.push_back(Token{to_lower(sw.word), sw.begin, sw.end});
  return out;
}

static std::vector<std::string> tokenize_words(const std::string& text) {
  std::vector<std::string> out;
  for (auto& t : TrigramLm::tokenize(text)) out.push_back(std::move(t.word));
  return out;
}

TrigramLm TrigramLm::from_corpus(const std::string& corpus_text) {
  std::set<std::string> vocab;
  std::vector<std::vector<std::string>> sentences;
  std::istringstream in(corpus_text);
  std::string line;
  while (std::getline(in, line)) {
    auto words = tokenize_words(line);
    if (words.empty()) continue;
    for (const auto& w : words) vocab.insert(w);
    sentences.push_back(std::move(words));
  }

  TrigramLm lm;
  lm.words_.assign(vocab.begin(), vocab.end());
  for (size_t i = 0; i < lm.words_.size(); ++i)
    lm.word_ids_[lm.words_[i]] = static_cast<int32_t>(i);
  const int32_t w = static_cast<int32_t>(lm.words_.size());
  lm.unk_id_ = w;
  lm.eos_id_ = w + 1;
  lm.bos_id_ = w + 2;

  for (const auto& sent : sentences) {
    int32_t u = lm.bos_id_, v = lm.bos_id_;
    for (size_t i = 0; i <= sent.size(); ++i) {
      int32_t t = i < sent.size() ? lm.word_ids_.at(sent[i]) : lm.eos_id_;
      auto& row = lm.table_[lm.context_key(u, v)];
      ++row.counts[t];
      ++row.total;
      u = v;
      v = t;
    }
  }
  lm.finalize();
  return lm;
}

TrigramLm TrigramLm::from_counts(std::vector<std::string> vocabulary,
                                 const std::map<std::array<std::string, 3>, int64_t>& counts) {
  std::set<std::string> vocab;
  for (auto& word : vocabulary) vocab.insert(to_lower(word));
  TrigramLm lm;
  lm.words_.assign(vocab.begin(), vocab.end());
  for (size_t i = 0; i < lm.words_.size(); ++i)
    lm.word_ids_[lm.words_[i]] = static_cast<int32_t>(i);
  const int32_t w = static_cast<int32_t>(lm.words_.size());
  lm.unk_id_ = w;
  lm.eos_id_ = w + 1;
  lm.bos_id_ = w + 2;

  auto resolve = [&](const std::string& s, bool context_position) -> int32_t {
    std::string word = to_lower(s);
    if (word == kUnk) return lm.unk_id_;
    if (context_position && word == kBos) return lm.bos_id_;
    if (!context_position && word == kEos) return lm.eos_id_;
    auto it = lm.word_ids_.find(word);
    if (it == lm.word_ids_.end())
      throw std::invalid_argument("from_counts: '" + s + "' is not in the vocabulary");
    return it->second;
  };

  for (const auto& [key, count] : counts) {
    if (count < 0) throw std::invalid_argument("from_counts: negative count");
    if (count == 0) continue;
    int32_t u = resolve(key[0], true);
    int32_t v = resolve(key[1], true);
    int32_t t = resolve(key[2], false);
    auto& row = lm.table_[lm.context_key(u, v)];
    row.counts[t] += count;
    row.total += count;
  }
  lm.finalize();
  return lm;
}

void TrigramLm::finalize() {
  // Canonical table dump -> content hash; backend version for cache keys.
  std::ostringstream dump;
  for (const auto& word : words_) dump << word << '\n';
  dump << "--\n";
  std::map<std::tuple<int32_t, int32_t, int32_t>, int64_t> sorted;
  for (const auto& [key, row] : table_) {
    int32_t u = static_cast<int32_t>(key / (words_.size() + 3));
    int32_t v = static_cast<int32_t>(key % (words_.size() + 3));
    for (const auto& [t, c] : row.counts) sorted[{u, v, t}] = c;
  }
  for (const auto& [k, c] : sorted)
    dump << std::get<0>(k) << ' ' << std::get<1>(k) << ' ' << std::get<2>(k) << ' ' << c << '\n';
  version_ = sha256_hex(dump.str()).substr(0, 16);
}

uint64_t TrigramLm::context_key(int32_t u, int32_t v) const {
  return static_cast<uint64_t>(u) * (words_.size() + 3) + static_cast<uint64_t>(v);
}

int32_t TrigramLm::word_id(const std::string& w) const {
  if (w == kEos) return eos_id_;
  if (w == kUnk) return unk_id_;
  auto it = word_ids_.find(w);
  return it == word_ids_.end() ? unk_id_ : it->second;
}

int32_t TrigramLm::context_id(const std::string& w) const {
  if (w == kBos) return bos_id_;
  if (w == kEos) return eos_id_;
  if (w == kUnk) return unk_id_;
  auto it = word_ids_.find(w);
  return it == word_ids_.end() ? unk_id_ : it->second;
}

double TrigramLm::logprob_ids(int32_t u, int32_t v, int32_t t) const {
  int64_t count = 0;
  int64_t total = 0;
  auto it = table_.find(context_key(u, v));
  if (it != table_.end()) {
    total = it->second.total;
    auto ct = it->second.counts.find(t);
    if (ct != it->second.counts.end()) count = ct->second;
  }
  const double v_support = static_cast<double>(support_size());
  return std::log(static_cast<double>(count + 1)) -
         std::log(static_cast<double>(total) + v_support);
}

double TrigramLm::token_logprob(const std::string& u, const std::string& v,
                                const std::string& w) const {
  return logprob_ids(context_id(to_lower(u)), context_id(to_lower(v)), word_id(to_lower(w)));
}

std::vector<TokenScore> TrigramLm::score_continuation(const std::string& prompt,
                                                      const std::string& continuation) {
  if (continuation.empty())
    throw std::invalid_argument("score_continuation: empty continuation");
  const std::string full = prompt + continuation;
  const size_t boundary = prompt.size();
  std::vector<Token> tokens = tokenize(full);

  std::vector<TokenScore> out;
  int32_t u = bos_id_, v = bos_id_;
  for (const auto& tok : tokens) {
    int32_t t = word_id(tok.word);
    if (tok.end > boundary) {
      TokenScore ts;
      ts.token_text = tok.word;
      ts.logprob = logprob_ids(u, v, t);
      ts.span_begin = tok.begin > boundary ? tok.begin - boundary : 0;
      ts.span_end = tok.end - boundary;
      out.push_back(std::move(ts));
    }
    u = v;
    v = t;
  }
  if (out.empty())
    throw std::invalid_argument("score_continuation: continuation has no tokens");
  return out;
}

double TrigramLm::single_infill_logprob(const std::vector<std::string>& left,
                                        const std::string& word,
                                        const std::vector<std::string>& right) const {
  if (word_ids_.find(word) == word_ids_.end())
    throw BackendError("score_infill: infill word '" + word + "' is out of vocabulary");

  // Context ids around the slot.
  int32_t u = bos_id_, v = bos_id_;
  if (left.size() >= 2) {
    u = context_id(left[left.size() - 2]);
    v = context_id(left[left.size() - 1]);
  } else if (left.size() == 1) {
    v = context_id(left[0]);
  }
  int32_t r0 = right.size() >= 1 ? word_id(right[0]) : -1;
  int32_t r1 = right.size() >= 2 ? word_id(right[1]) : -1;

  auto window_logprob = [&](int32_t cand) {
    double lp = logprob_ids(u, v, cand);
    if (r0 >= 0) {
      lp += logprob_ids(v, cand, r0);
      if (r1 >= 0) lp += logprob_ids(cand, r0, r1);
    }
    return lp;
  };

  const int32_t target = word_ids_.at(word);
  double target_lp = 0.0;
  double max_lp = -HUGE_VAL;
  std::vector<double> lps(words_.size());
  for (size_t i = 0; i < words_.size(); ++i) {
    lps[i] = window_logprob(static_cast<int32_t>(i));
    max_lp = std::max(max_lp, lps[i]);
    if (static_cast<int32_t>(i) == target) target_lp = lps[i];
  }
  double sum = 0.0;
  for (double lp : lps) sum += std::exp(lp - max_lp);
  return target_lp - (max_lp + std::log(sum));
}

double TrigramLm::score_infill(const std::string& prefix, const std::string& suffix,
                               const std::string& infill) {
  std::vector<std::string> infill_words = tokenize_words(infill);
  if (infill_words.empty()) throw std::invalid_argument("score_infill: empty infill");
  std::vector<std::string> left = tokenize_words(prefix);
  std::vector<std::string> right_tail = tokenize_words(suffix);

  // Multi-word infills are scored word by word, left to right, each with
  // both-side context; the logprobs sum.
  double total = 0.0;
  for (size_t i = 0; i < infill_words.size(); ++i) {
    std::vector<std::string> right(infill_words.begin() + i + 1, infill_words.end());
    right.insert(right.end(), right_tail.begin(), right_tail.end());
    total += single_infill_logprob(left, infill_words[i], right);
    left.push_back(infill_words[i]);
  }
  return total;
}

std::string TrigramLm::generate(const std::string& prompt, const GenerationParams& params) {
  if (!(params.temperature > 0.0))
    throw std::invalid_argument("generate: temperature must be > 0");
  if (params.max_tokens <= 0)
    throw std::invalid_argument("generate: max_tokens must be positive");

  std::vector<std::string> context = tokenize_words(prompt);
  int32_t u = bos_id_, v = bos_id_;
  if (context.size() >= 2) {
    u = context_id(context[context.size() - 2]);
    v = context_id(context[context.size() - 1]);
  } else if (context.size() == 1) {
    v = context_id(context[0]);
  }

  std::mt19937_64 rng(static_cast<uint64_t>(params.seed));
  auto next_uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  // Candidates: vocabulary words in sorted order, then </s>. <unk> is never
  // emitted.
  std::vector<std::string> out_words;
  const size_t n_candidates = words_.size() + 1;
  std::vector<double> weights(n_candidates);
  for (int step = 0; step < params.max_tokens; ++step) {
    double max_lp = -HUGE_VAL;
    for (size_t i = 0; i < n_candidates; ++i) {
      int32_t cand = i < words_.size() ? static_cast<int32_t>(i) : eos_id_;
      weights[i] = logprob_ids(u, v, cand) / params.temperature;
      max_lp = std::max(max_lp, weights[i]);
    }
    double total = 0.0;
    for (double& w : weights) {
      w = std::exp(w - max_lp);
      total += w;
    }
    double pick = next_uniform() * total;
    size_t chosen = n_candidates - 1;
    double acc = 0.0;
    for (size_t i = 0; i < n_candidates; ++i) {
      acc += weights[i];
      if (pick < acc) {
        chosen = i;
        break;
      }
    }
    if (chosen == words_.size()) break;  // </s>
    out_words.push_back(words_[chosen]);
    u = v;
    v = static_cast<int32_t>(chosen);
  }
  return join(out_words, " ");
}

Embedding TrigramLm::embed(const std::string& text) {
  Embedding v(kEmbeddingDim, 0.0);
  for (const auto& tok : tokenize(text)) v[fnv1a64(tok.word) % kEmbeddingDim] += 1.0;
  return v;
}

std::vector<std::pair<std::string, double>> TrigramLm::next_token_distribution(
    const std::string& u, const std::string& v) const {
  int32_t ui = context_id(to_lower(u));
  int32_t vi = context_id(to_lower(v));
  std::vector<std::pair<std::string, double>> out;
  for (size_t i = 0; i < words_.size(); ++i)
    out.emplace_back(words_[i], std::exp(logprob_ids(ui, vi, static_cast<int32_t>(i))));
  out.emplace_back(kUnk, std::exp(logprob_ids(ui, vi, unk_id_)));
  out.emplace_back(kEos, std::exp(logprob_ids(ui, vi, eos_id_)));
  return out;
}

double total_logprob(const std::vector<TokenScore>& scores) {
  double sum = 0.0;
  for (const auto& s : scores) sum += s.logprob;
  return sum;
}

}  // namespace mcq
