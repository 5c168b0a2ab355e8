// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_DATASET_HPP_
#define MCQ_DATASET_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"

#include "mcq/item.hpp"

namespace mcq {

inline constexpr const char* kDatasetSchemaVersion = "1";

// JSONL: first line is a header object {"schema_version": "..."}, every
// following line one item object. See docs/formats.md.
std::vector<Item> load_dataset(const std::filesystem::path& path,
                               const std::string& schema_version = kDatasetSchemaVersion);

void save_dataset(const std::filesystem::path& path, const std::vector<Item>& items,
                  const std::string& schema_version = kDatasetSchemaVersion);

nlohmann::json item_to_json(const Item& item);
Item item_from_json(const nlohmann::json& j, const std::string& fallback_id);

// Items of one condition, dataset order preserved.
std::vector<Item> items_of_condition(const std::vector<Item>& items, const std::string& condition);

// Distinct conditions in first-appearance order.
std::vector<std::string> condition_names(const std::vector<Item>& items);

}  // namespace mcq

#endif  // MCQ_DATASET_HPP_
