// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_ITEM_HPP_
#define MCQ_ITEM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcq/util/rational.hpp"

namespace mcq {

// One multiple-choice vignette. `context` carries the trigger sentence;
// `task_description` and `question` are shared across items of a condition
// in typical datasets but are stored per item.
struct Item {
  std::string id;
  std::string condition;
  std::string task_description;
  std::string context;
  std::string question;
  std::vector<std::string> options;
  int target_index = 0;
  std::optional<std::vector<int64_t>> human_counts;  // parallel to options

  size_t option_count() const { return options.size(); }
};

// Throws ValidationError naming the item id and the violated rule.
void validate_item(const Item& item);

enum class LabelKind { UppercaseLetters, Numerals };

LabelKind label_kind_from_string(const std::string& s);
std::string label_kind_to_string(LabelKind k);

// Ordered answer labels for the option list ("A", "B", ... or "1", "2", ...).
struct LabelScheme {
  LabelKind kind = LabelKind::UppercaseLetters;

  // Exactly k labels, pairwise distinct. k must be <= 8 (schema bound).
  std::vector<std::string> labels_for(size_t k) const;
};

// Mean over items of 1/k_i, exact. Throws on an empty list.
Rational chance_accuracy(const std::vector<Item>& items);

}  // namespace mcq

#endif  // MCQ_ITEM_HPP_
