// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_METRICS_HPP_
#define MCQ_METRICS_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcq/item.hpp"
#include "mcq/methods.hpp"

namespace mcq {

struct ConditionAccuracy {
  std::string condition;
  std::string method;
  std::string score_kind;  // "averaged" for the method-level mean
  int64_t n_items = 0;
  int64_t n_correct = 0;
  double accuracy = 0.0;
  double chance = 0.0;
};

// Per (condition, method, score kind) accuracy over the given results, plus
// one "averaged" row per (condition, method): the mean of the method's
// score-kind accuracies (the aggregation used for grouped bar charts).
// Abstentions count as incorrect. Results must reference known items.
std::vector<ConditionAccuracy> accuracy_by_condition(const std::vector<MethodResult>& results,
                                                     const std::vector<Item>& items);

struct FitResult {
  std::string condition;
  std::string method;
  std::string score_kind;
  double target_rate = 0.0;  // proportion of target choices
  double smoothed_p = 0.0;   // clamped to [eps, 1-eps]
  int64_t human_target_count = 0;
  int64_t human_total = 0;
  double log_likelihood = 0.0;
  double delta_ll = 0.0;
};

// log Binomial(k; n, clamp(p_raw, eps, 1-eps)) via log-gamma. n = 0 gives 0
// (empty product). Throws when k > n or inputs are out of range.
double binomial_log_likelihood(int64_t k, int64_t n, double p_raw, double eps);

// Condition-level fits: the target rate of each (condition, method, score)
// triple predicts the pooled human target count of that condition. The
// smoothing clamp is eps = 1 / (2 * n_items) of the condition. Conditions
// without human counts are skipped.
std::vector<FitResult> fit_by_condition(const std::vector<MethodResult>& results,
                                        const std::vector<Item>& items);

enum class BaselineRule { GlobalMinTotal };

// Fills delta_ll: the baseline is the (method, score kind) pair with the
// lowest total log-likelihood; each fit subtracts the baseline's fit of the
// same condition. Throws on empty input.
std::vector<FitResult> delta_ll(std::vector<FitResult> fits,
                                BaselineRule rule = BaselineRule::GlobalMinTotal);

// The (method:score_kind) column name order used in robustness matrices.
std::string result_column(const MethodResult& r);

struct AgreementMatrix {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> raw;    // fraction of co-decided items agreeing
  std::vector<std::vector<double>> kappa;  // Cohen's kappa
  int64_t flip_count = 0;                  // items where any two columns disagree
  int64_t n_items = 0;
};

struct RobustnessReport {
  AgreementMatrix overall;
  std::map<std::string, AgreementMatrix> per_condition;
  // item id -> column -> chosen index (absent = abstained/undecided)
  std::map<std::string, std::map<std::string, std::optional<int>>> per_item;
};

RobustnessReport robustness(const std::vector<MethodResult>& results,
                            const std::vector<Item>& items);

// Cohen's kappa for two aligned choice sequences (equal length, both
// decided). Returns 1 when both raters are constant and equal.
double cohen_kappa(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace mcq

#endif  // MCQ_METRICS_HPP_
