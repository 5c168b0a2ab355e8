// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_SCORES_HPP_
#define MCQ_SCORES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mcq/backend.hpp"
#include "mcq/item.hpp"

namespace mcq {

// Pure score arithmetic on token-level evidence. All values are "higher is
// better" so a single argmax rule applies everywhere.

// Score (2): arithmetic mean of per-token probabilities. Distinct from (3);
// a geometric-mean reading would collapse the two.
double avg_option_prob(const std::vector<TokenScore>& token_scores);

// Score (3): mean per-token log-probability (average negative surprisal).
double avg_neg_surprisal(const std::vector<TokenScore>& token_scores);

// Score (4) in log space: log P(o|I) - log P(o|I0).
double prior_corrected_logprob(double conditional_logprob, double prior_logprob);

// Score (5): S0 / S with S = -log P(o|I), S0 = -log P(o|I0). Requires both
// surprisals strictly positive; a zero conditional surprisal throws.
double surprisal_reduction_factor(double conditional_logprob, double prior_logprob);

// Score (6) helper: probability-weighted mean rating, renormalized over the
// five rating-label masses. Throws if all masses underflow to zero.
double rating_weighted_mean(const std::vector<double>& label_masses);

// Score (7): cosine similarity; throws on a zero-norm vector.
double cosine_similarity(const Embedding& a, const Embedding& b);

// SQuAD-style token F1 between two texts under classifier normalization
// (lowercase, strip punctuation, collapse whitespace).
double token_f1(const std::string& a, const std::string& b);

// Maps a free generation to an option index: F1 argmax if it clears the
// threshold and strictly beats the runner-up, otherwise abstains.
std::optional<int> classify_generation(const std::string& generation, const Item& item,
                                       double f1_threshold = 0.5);

// Argmax with the documented tie rule: lowest index wins, tie flagged.
size_t argmax_lowest_index(const std::vector<double>& scores, bool* tied);

}  // namespace mcq

#endif  // MCQ_SCORES_HPP_
