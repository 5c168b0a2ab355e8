// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/dataset.hpp"

#include <fstream>
#include <set>

#include "mcq/util/errors.hpp"

namespace mcq {

using nlohmann::json;

nlohmann::json item_to_json(const Item& item) {
  json j;
  j["id"] = item.id;
  j["condition"] = item.condition;
  j["task_description"] = item.task_description;
  j["context"] = item.context;
  j["question"] = item.question;
  j["options"] = item.options;
  j["target_index"] = item.target_index;
  if (item.human_counts) j["human_counts"] = *item.human_counts;
  return j;
}

Item item_from_json(const json& j, const std::string& fallback_id) {
  if (!j.is_object()) throw ValidationError("item line is not a JSON object");
  Item it;
  it.id = j.value("id", fallback_id);
  auto require_string = [&](const char* key) -> std::string {
    if (!j.contains(key))
      throw ValidationError("item '" + it.id + "': missing field '" + key + "'");
    if (!j.at(key).is_string())
      throw ValidationError("item '" + it.id + "': field '" + key + "' must be a string");
    return j.at(key).get<std::string>();
  };
  it.condition = require_string("condition");
  it.task_description = require_string("task_description");
  it.context = require_string("context");
  it.question = require_string("question");
  if (!j.contains("options") || !j.at("options").is_array())
    throw ValidationError("item '" + it.id + "': missing or non-array field 'options'");
  for (const auto& o : j.at("options")) {
    if (!o.is_string())
      throw ValidationError("item '" + it.id + "': options must be strings");
    it.options.push_back(o.get<std::string>());
  }
  if (!j.contains("target_index") || !j.at("target_index").is_number_integer())
    throw ValidationError("item '" + it.id + "': missing or non-integer field 'target_index'");
  it.target_index = j.at("target_index").get<int>();
  if (j.contains("human_counts")) {
    if (!j.at("human_counts").is_array())
      throw ValidationError("item '" + it.id + "': human_counts must be an array");
    std::vector<int64_t> counts;
    for (const auto& c : j.at("human_counts")) {
      if (!c.is_number_integer())
        throw ValidationError("item '" + it.id + "': human_counts must be integers");
      counts.push_back(c.get<int64_t>());
    }
    it.human_counts = std::move(counts);
  }
  validate_item(it);
  return it;
}

std::vector<Item> load_dataset(const std::filesystem::path& path,
                               const std::string& schema_version) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open dataset: " + path.string());
  std::vector<Item> items;
  std::set<std::string> ids;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                            ": malformed JSON line: " + e.what());
    }
    if (!have_header) {
      if (!j.is_object() || !j.contains("schema_version"))
        throw ValidationError(path.string() + ":1: first line must be a header object with "
                              "'schema_version'");
      std::string v = j.at("schema_version").get<std::string>();
      if (v != schema_version)
        throw ValidationError(path.string() + ": schema_version '" + v + "' does not match '" +
                              schema_version + "'");
      have_header = true;
      continue;
    }
    Item it;
    try {
      it = item_from_json(j, "line-" + std::to_string(lineno));
    } catch (const ValidationError& e) {
      throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (!ids.insert(it.id).second)
      throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": duplicate id '" +
                            it.id + "'");
    items.push_back(std::move(it));
  }
  if (!have_header)
    throw ValidationError(path.string() + ": empty dataset (missing schema header)");
  return items;
}

void save_dataset(const std::filesystem::path& path, const std::vector<Item>& items,
                  const std::string& schema_version) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write dataset: " + path.string());
  out << json{{"schema_version", schema_version}}.dump() << "\n";
  for (const auto& it : items) out << item_to_json(it).dump() << "\n";
}

std::vector<Item> items_of_condition(const std::vector<Item>& items,
                                     const std::string& condition) {
  std::vector<Item> out;
  for (const auto& it : items)
    if (it.condition == condition) out.push_back(it);
  return out;
}

std::vector<std::string> condition_names(const std::vector<Item>& items) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& it : items)
    if (seen.insert(it.condition).second) out.push_back(it.condition);
  return out;
}

}  // namespace mcq
