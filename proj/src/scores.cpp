// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/scores.hpp"

#include <cmath>
#include <map>

#include "mcq/util/strings.hpp"

namespace mcq {

double avg_option_prob(const std::vector<TokenScore>& token_scores) {
  if (token_scores.empty()) throw std::invalid_argument("avg_option_prob: no token scores");
  double sum = 0.0;
  for (const auto& t : token_scores) sum += std::exp(t.logprob);
  return sum / static_cast<double>(token_scores.size());
}

double avg_neg_surprisal(const std::vector<TokenScore>& token_scores) {
  if (token_scores.empty()) throw std::invalid_argument("avg_neg_surprisal: no token scores");
  return total_logprob(token_scores) / static_cast<double>(token_scores.size());
}

double prior_corrected_logprob(double conditional_logprob, double prior_logprob) {
  return conditional_logprob - prior_logprob;
}

double surprisal_reduction_factor(double conditional_logprob, double prior_logprob) {
  const double s = -conditional_logprob;
  const double s0 = -prior_logprob;
  if (!(s > 0.0))
    throw std::domain_error("surprisal_reduction_factor: zero conditional surprisal");
  if (!(s0 > 0.0))
    throw std::domain_error("surprisal_reduction_factor: zero prior surprisal");
  return s0 / s;
}

double rating_weighted_mean(const std::vector<double>& label_masses) {
  double total = 0.0;
  double weighted = 0.0;
  for (size_t k = 0; k < label_masses.size(); ++k) {
    total += label_masses[k];
    weighted += static_cast<double>(k + 1) * label_masses[k];
  }
  if (!(total > 0.0))
    throw std::domain_error("rating_weighted_mean: all rating-label masses are zero");
  return weighted / total;
}

double cosine_similarity(const Embedding& a, const Embedding& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("cosine_similarity: dimension mismatch");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0)
    throw std::domain_error("cosine_similarity: zero-norm vector");
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

double token_f1(const std::string& a, const std::string& b) {
  const auto ta = normalize_tokens(a);
  const auto tb = normalize_tokens(b);
  if (ta.empty() || tb.empty()) return 0.0;
  std::map<std::string, int> counts;
  for (const auto& w : ta) ++counts[w];
  int overlap = 0;
  for (const auto& w : tb) {
    auto it = counts.find(w);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  if (overlap == 0) return 0.0;
  const double precision = static_cast<double>(overlap) / static_cast<double>(ta.size());
  const double recall = static_cast<double>(overlap) / static_cast<double>(tb.size());
  return 2.0 * precision * recall / (precision + recall);
}

std::optional<int> classify_generation(const std::string& generation, const Item& item,
                                       double f1_threshold) {
  double best = -1.0, second = -1.0;
  int best_idx = -1;
  for (size_t j = 0; j < item.options.size(); ++j) {
    double f1 = token_f1(generation, item.options[j]);
    if (f1 > best) {
      second = best;
      best = f1;
      best_idx = static_cast<int>(j);
    } else if (f1 > second) {
      second = f1;
    }
  }
  if (best_idx < 0 || best < f1_threshold || best <= second) return std::nullopt;
  return best_idx;
}

size_t argmax_lowest_index(const std::vector<double>& scores, bool* tied) {
  if (scores.empty()) throw std::invalid_argument("argmax: empty score list");
  size_t best = 0;
  bool tie = false;
  for (size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) {
      best = i;
      tie = false;
    } else if (scores[i] == scores[best]) {
      tie = true;
    }
  }
  if (tied) *tied = tie;
  return best;
}

}  // namespace mcq
