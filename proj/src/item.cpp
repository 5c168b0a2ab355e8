// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/item.hpp"

#include <set>

#include "mcq/util/errors.hpp"
#include "mcq/util/strings.hpp"

namespace mcq {

void validate_item(const Item& item) {
  auto fail = [&](const std::string& rule) {
    throw ValidationError("item '" + item.id + "': " + rule);
  };
  if (item.id.empty()) throw ValidationError("item with empty id");
  if (item.condition.empty()) fail("condition must be non-empty");
  const size_t k = item.options.size();
  if (k < 2 || k > 8) fail("option count must be in [2, 8], got " + std::to_string(k));
  if (item.target_index < 0 || static_cast<size_t>(item.target_index) >= k)
    fail("target_index " + std::to_string(item.target_index) + " out of range for " +
         std::to_string(k) + " options");
  std::set<std::string> seen;
  for (const auto& o : item.options) {
    std::string norm = normalize_ws(o);
    if (norm.empty()) fail("option empty after whitespace normalization");
    if (!seen.insert(norm).second) fail("options not pairwise distinct ('" + norm + "')");
  }
  if (item.human_counts) {
    if (item.human_counts->size() != k)
      fail("human_counts length " + std::to_string(item.human_counts->size()) +
           " != option count " + std::to_string(k));
    int64_t total = 0;
    for (int64_t c : *item.human_counts) {
      if (c < 0) fail("human_counts must be non-negative");
      total += c;
    }
    if (total < 1) fail("human_counts must sum to at least 1");
  }
}

LabelKind label_kind_from_string(const std::string& s) {
  if (s == "uppercase_letters") return LabelKind::UppercaseLetters;
  if (s == "numerals") return LabelKind::Numerals;
  throw ConfigError("unknown label scheme '" + s + "' (want uppercase_letters or numerals)");
}

std::string label_kind_to_string(LabelKind k) {
  return k == LabelKind::UppercaseLetters ? "uppercase_letters" : "numerals";
}

std::vector<std::string> LabelScheme::labels_for(size_t k) const {
  if (k > 8) throw ValidationError("label scheme supports at most 8 options");
  std::vector<std::string> out;
  out.reserve(k);
  for (size_t j = 0; j < k; ++j) {
    if (kind == LabelKind::UppercaseLetters)
      out.push_back(std::string(1, static_cast<char>('A' + j)));
    else
      out.push_back(std::to_string(j + 1));
  }
  return out;
}

Rational chance_accuracy(const std::vector<Item>& items) {
  if (items.empty()) throw std::invalid_argument("chance_accuracy: empty item list");
  Rational sum(0, 1);
  for (const auto& it : items) sum = sum + Rational(1, static_cast<int64_t>(it.options.size()));
  return sum / static_cast<int64_t>(items.size());
}

}  // namespace mcq
