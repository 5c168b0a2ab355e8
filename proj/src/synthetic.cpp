// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/synthetic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mcq/util/strings.hpp"

namespace mcq::synth {

const std::vector<std::string>& small_vocab() {
  static const std::vector<std::string> vocab{
      "answer", "bad",  "best",  "bird", "blue",     "cat",  "choose", "cold", "day",
      "dog",    "fish", "good",  "green", "happy",   "is",   "night",  "question",
      "rain",   "red",  "sad",   "snow",  "sun",     "the",  "tree",   "warm", "what",
      "wind"};
  return vocab;
}

std::string random_corpus(const std::vector<std::string>& vocab, int sentences, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string out;
  for (int s = 0; s < sentences; ++s) {
    const int len = 3 + static_cast<int>(pick(rng, 6));
    std::vector<std::string> words;
    for (int i = 0; i < len; ++i) words.push_back(vocab[pick(rng, vocab.size())]);
    out += join(words, " ");
    out += "\n";
  }
  return out;
}

namespace {

std::string random_phrase(std::mt19937_64& rng, const std::vector<std::string>& vocab,
                          int min_words, int max_words) {
  const int len = min_words + static_cast<int>(pick(rng, max_words - min_words + 1));
  std::vector<std::string> words;
  for (int i = 0; i < len; ++i) words.push_back(vocab[pick(rng, vocab.size())]);
  return join(words, " ");
}

std::vector<std::string> distinct_phrases(std::mt19937_64& rng,
                                          const std::vector<std::string>& vocab, size_t k,
                                          int min_words, int max_words) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  while (out.size() < k) {
    std::string p = random_phrase(rng, vocab, min_words, max_words);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

constexpr int kOptionCounts[] = {2, 4, 5};

}  // namespace

std::vector<Item> random_items(const std::vector<std::string>& vocab, int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Item> items;
  for (int i = 0; i < n; ++i) {
    Item it;
    it.id = "syn-" + std::to_string(i + 1);
    it.condition = "synthetic";
    it.task_description = "choose the best answer";
    it.context = random_phrase(rng, vocab, 4, 8);
    it.question = "what is the best answer";
    const size_t k = kOptionCounts[pick(rng, 3)];
    it.options = distinct_phrases(rng, vocab, k, 1, 3);
    it.target_index = static_cast<int>(pick(rng, k));
    validate_item(it);
    items.push_back(std::move(it));
  }
  return items;
}

const std::vector<std::string>& bundled_conditions() {
  static const std::vector<std::string> conditions{
      "coherence", "deceit", "humor", "indirect_speech", "irony", "maxims", "metaphor"};
  return conditions;
}

std::vector<Item> bundled_dataset(int items_per_condition, uint64_t seed) {
  // Word pools matching data/toy_corpus.txt, so toy-LM scores stay
  // non-degenerate on the bundled run.
  static const std::vector<std::string> context_words{
      "the", "movie",  "party", "rain",  "sun",   "dinner", "game",  "speaker", "friend",
      "judge", "said", "was",   "is",    "great", "terrible", "fun", "boring",  "cold",
      "warm",  "really", "very", "not",  "good",  "bad"};
  static const std::vector<std::string> option_words{
      "really great", "really bad",   "the opposite", "not good",   "very fun",
      "very boring",  "a joke",       "a lie",        "the truth",  "an honest answer",
      "warm praise",  "cold words",   "literal talk", "a hint",     "good news",
      "bad news",     "a kind answer", "a sharp answer"};
  static const std::map<std::string, std::pair<std::string, std::string>> framing{
      {"coherence", {"decide whether the story fits together .", "does the story fit together ?"}},
      {"deceit", {"decide why the speaker said it .", "why did the speaker say it ?"}},
      {"humor", {"decide what makes the line funny .", "what makes the line funny ?"}},
      {"indirect_speech", {"decide what the speaker wants .", "what does the speaker want ?"}},
      {"irony", {"decide what the speaker means .", "what did the speaker mean ?"}},
      {"maxims", {"decide what the speaker conveys .", "what did the speaker convey ?"}},
      {"metaphor", {"decide what the phrase stands for .", "what does the phrase stand for ?"}}};

  std::mt19937_64 rng(seed);
  std::vector<Item> items;
  for (const auto& condition : bundled_conditions()) {
    const auto& [task, question] = framing.at(condition);
    for (int i = 0; i < items_per_condition; ++i) {
      Item it;
      it.id = condition + "-" + std::to_string(i + 1);
      it.condition = condition;
      it.task_description = task;
      it.context = random_phrase(rng, context_words, 6, 10) + " .";
      it.question = question;
      const size_t k = kOptionCounts[i % 3];
      it.options = [&] {
        std::set<size_t> chosen;
        std::vector<std::string> opts;
        while (opts.size() < k) {
          size_t w = pick(rng, option_words.size());
          if (chosen.insert(w).second) opts.push_back(option_words[w]);
        }
        return opts;
      }();
      it.target_index = static_cast<int>(pick(rng, k));

      // Synthetic raters: 30 per item, mostly target-leaning; rates differ by
      // condition so the fit tables have structure.
      const double rate = 0.55 + 0.05 * static_cast<double>(
                                            std::distance(bundled_conditions().begin(),
                                                          std::find(bundled_conditions().begin(),
                                                                    bundled_conditions().end(),
                                                                    condition)));
      std::vector<int64_t> counts(k, 0);
      for (int r = 0; r < 30; ++r) {
        if (canon(rng) < rate) ++counts[it.target_index];
        else ++counts[pick(rng, k)];
      }
      it.human_counts = std::move(counts);
      validate_item(it);
      items.push_back(std::move(it));
    }
  }
  return items;
}

Planted make_planted(int n_items, uint64_t seed) {
  (void)seed;  // the construction is fully determined by n_items

  // Layout invariants: the string and label prompts both end with the
  // question, so every planted row lives under the question's final bigram.
  const std::string task = "pick one .";
  const std::string question = "which answer fits best ?";
  const std::string ctx_u = "best", ctx_v = "?";

  std::vector<std::string> vocab{"pick", "one", ".", "which", "answer", "fits", "best", "?",
                                 "the",  "speaker", "said", "something",
                                 "a", "b", "c", "d", "e"};
  std::map<std::array<std::string, 3>, int64_t> counts;
  counts[{ctx_u, ctx_v, "a"}] = 100;  // label "A" wins the label prompt

  std::vector<Item> items;
  for (int i = 0; i < n_items; ++i) {
    const size_t k = kOptionCounts[i % 3];
    Item it;
    it.id = "planted-" + std::to_string(i + 1);
    it.condition = "planted";
    it.task_description = task;
    it.context = "the speaker said something .";
    it.question = question;
    for (size_t j = 0; j < k; ++j) {
      std::string word = "w" + std::to_string(i + 1) + "x" + std::to_string(j + 1);
      it.options.push_back(word);
      vocab.push_back(word);
    }
    it.target_index = 0;  // the shared label context forces a fixed index
    counts[{ctx_u, ctx_v, it.options[0]}] = 100;
    validate_item(it);
    items.push_back(std::move(it));
  }
  return Planted{std::move(items), TrigramLm::from_counts(std::move(vocab), counts)};
}

}  // namespace mcq::synth
