// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_PROMPTS_HPP_
#define MCQ_PROMPTS_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mcq/item.hpp"

namespace mcq {

// Layout of the assembled prompts. Content (task description, context,
// question, options) comes from the dataset; templates only decide how the
// pieces are glued together. Slots usable in layouts: task, context,
// question, options, rating_question.
struct PromptTemplates {
  std::string separator = "\n\n";
  // Inserted between a prompt and a scored continuation (option or label).
  std::string continuation_prefix = " ";

  std::vector<std::string> string_layout{"task", "context", "question"};
  std::vector<std::string> label_layout{"task", "context", "options", "question"};
  std::vector<std::string> rating_layout{"task", "context", "rating_question"};

  std::string option_line = "{label}. {option}";
  std::string rating_question =
      "On a scale of 1 to 5, how {concept} is the following answer?\n"
      "Answer: {option}\n"
      "Rating:";
  std::vector<std::string> rating_concepts{"likely", "appropriate", "plausible", "possible"};

  // Per-condition layout overrides, applied by resolved_for().
  std::map<std::string, std::map<std::string, std::string>> condition_overrides;

  static PromptTemplates load_file(const std::filesystem::path& path);
  PromptTemplates resolved_for(const std::string& condition) const;
};

// Assembled inputs for one item, for every method family. Prior prompts are
// derived by deleting the context/question slots from the layout, never by
// editing rendered text.
struct PromptBundle {
  std::string string_prompt;        // task + context + question
  std::string string_prior_prompt;  // task only
  std::string label_prompt;         // task + context + labeled options + question
  std::string label_prior_prompt;   // task + labeled options
  std::vector<std::string> labels;  // rendered label strings, one per option
  // concept -> one rating prompt per option
  std::map<std::string, std::vector<std::string>> rating_prompts;
  std::string continuation_prefix;
};

// Pure: identical inputs yield byte-identical prompts.
PromptBundle assemble_prompts(const Item& item, const LabelScheme& scheme,
                              const PromptTemplates& templates);

// {name} substitution; throws ValidationError on a slot the map lacks.
std::string render_slots(const std::string& tpl,
                         const std::map<std::string, std::string>& slots);

}  // namespace mcq

#endif  // MCQ_PROMPTS_HPP_
