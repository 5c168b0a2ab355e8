// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/prompts.hpp"

#include <algorithm>

#include "mcq/util/errors.hpp"
#include "mcq/util/strings.hpp"
#include "mcq/util/toml.hpp"

namespace mcq {

std::string render_slots(const std::string& tpl,
                         const std::map<std::string, std::string>& slots) {
  std::string out;
  out.reserve(tpl.size());
  size_t i = 0;
  while (i < tpl.size()) {
    char c = tpl[i];
    if (c != '{') {
      out.push_back(c);
      ++i;
      continue;
    }
    size_t close = tpl.find('}', i + 1);
    if (close == std::string::npos)
      throw ValidationError("template has unterminated '{' in: " + tpl);
    std::string name = tpl.substr(i + 1, close - i - 1);
    auto it = slots.find(name);
    if (it == slots.end())
      throw ValidationError("template references a missing slot '" + name + "'");
    out += it->second;
    i = close + 1;
  }
  return out;
}

namespace {

std::string assemble_layout(const std::vector<std::string>& layout,
                            const std::map<std::string, std::string>& slots,
                            const std::string& separator) {
  std::vector<std::string> parts;
  for (const auto& name : layout) {
    auto it = slots.find(name);
    if (it == slots.end())
      throw ValidationError("template references a missing slot '" + name + "'");
    if (!it->second.empty()) parts.push_back(it->second);
  }
  return join(parts, separator);
}

// Prior layouts drop the slots that carry item-specific context.
std::vector<std::string> prior_layout(const std::vector<std::string>& layout) {
  std::vector<std::string> out;
  for (const auto& s : layout)
    if (s != "context" && s != "question") out.push_back(s);
  return out;
}

}  // namespace

PromptBundle assemble_prompts(const Item& item, const LabelScheme& scheme,
                              const PromptTemplates& raw_templates) {
  const PromptTemplates tpl = raw_templates.resolved_for(item.condition);

  const std::vector<std::string> labels = scheme.labels_for(item.options.size());
  std::vector<std::string> option_lines;
  for (size_t j = 0; j < item.options.size(); ++j) {
    option_lines.push_back(
        render_slots(tpl.option_line, {{"label", labels[j]}, {"option", item.options[j]}}));
  }
  const std::string option_list = join(option_lines, "\n");

  std::map<std::string, std::string> slots{
      {"task", item.task_description},
      {"context", item.context},
      {"question", item.question},
      {"options", option_list},
  };

  PromptBundle b;
  b.continuation_prefix = tpl.continuation_prefix;
  b.labels = labels;
  b.string_prompt = assemble_layout(tpl.string_layout, slots, tpl.separator);
  b.string_prior_prompt = assemble_layout(prior_layout(tpl.string_layout), slots, tpl.separator);
  b.label_prompt = assemble_layout(tpl.label_layout, slots, tpl.separator);
  b.label_prior_prompt = assemble_layout(prior_layout(tpl.label_layout), slots, tpl.separator);

  for (const auto& scale_concept : tpl.rating_concepts) {
    std::vector<std::string> per_option;
    for (const auto& option : item.options) {
      auto rating_slots = slots;
      rating_slots["rating_question"] =
          render_slots(tpl.rating_question, {{"concept", scale_concept}, {"option", option}});
      per_option.push_back(assemble_layout(tpl.rating_layout, rating_slots, tpl.separator));
    }
    b.rating_prompts[scale_concept] = std::move(per_option);
  }
  return b;
}

namespace {

const char* kOverridableKeys[] = {"separator", "continuation_prefix", "option_line",
                                  "rating_question"};

void apply_override(PromptTemplates& t, const std::string& key, const std::string& value) {
  if (key == "separator") t.separator = value;
  else if (key == "continuation_prefix") t.continuation_prefix = value;
  else if (key == "option_line") t.option_line = value;
  else if (key == "rating_question") t.rating_question = value;
  else
    throw ConfigError("unknown template override key '" + key + "'");
}

}  // namespace

PromptTemplates PromptTemplates::load_file(const std::filesystem::path& path) {
  toml::Table t = toml::Table::parse_file(path);
  std::string version = t.get_string("schema_version", "1");
  if (version != "1")
    throw ConfigError(path.string() + ": unsupported template schema_version '" + version + "'");

  PromptTemplates out;
  out.separator = t.get_string("templates.separator", out.separator);
  out.continuation_prefix = t.get_string("templates.continuation_prefix", out.continuation_prefix);
  out.string_layout = t.get_string_array("templates.string_layout", out.string_layout);
  out.label_layout = t.get_string_array("templates.label_layout", out.label_layout);
  out.rating_layout = t.get_string_array("templates.rating_layout", out.rating_layout);
  out.option_line = t.get_string("templates.option_line", out.option_line);
  out.rating_question = t.get_string("templates.rating_question", out.rating_question);
  out.rating_concepts = t.get_string_array("templates.rating_concepts", out.rating_concepts);

  for (const auto& full : t.keys_with_prefix("override.")) {
    std::string rest = full.substr(std::string("override.").size());
    size_t dot = rest.rfind('.');
    if (dot == std::string::npos)
      throw ConfigError(path.string() + ": override key must be override.<condition>.<key>");
    std::string condition = rest.substr(0, dot);
    std::string key = rest.substr(dot + 1);
    bool known = std::any_of(std::begin(kOverridableKeys), std::end(kOverridableKeys),
                             [&](const char* k) { return key == k; });
    if (!known)
      throw ConfigError(path.string() + ": unknown template override key '" + key + "'");
    out.condition_overrides[condition][key] = t.get_string(full);
  }
  return out;
}

PromptTemplates PromptTemplates::resolved_for(const std::string& condition) const {
  auto it = condition_overrides.find(condition);
  if (it == condition_overrides.end()) return *this;
  PromptTemplates resolved = *this;
  resolved.condition_overrides.clear();
  for (const auto& [key, value] : it->second) apply_override(resolved, key, value);
  return resolved;
}

}  // namespace mcq
