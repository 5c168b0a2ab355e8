// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0
//
// Seeded generators for synthetic datasets and toy-LM constructions. Used by
// the bundled-data generator tool, the test suites, and the benchmark. All
// randomness flows through explicit seeds and hand-rolled draws, so output
// is identical across platforms and standard libraries.

#ifndef MCQ_SYNTHETIC_HPP_
#define MCQ_SYNTHETIC_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcq/item.hpp"
#include "mcq/trigram_lm.hpp"

namespace mcq::synth {

// Uniform in [0, n); avoids std::uniform_int_distribution, whose output is
// implementation-defined.
inline uint64_t pick(std::mt19937_64& rng, uint64_t n) { return rng() % n; }
inline double canon(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Small closed vocabulary (under 30 words) for oracle tests.
const std::vector<std::string>& small_vocab();

// Random sentences over a vocabulary, one per line.
std::string random_corpus(const std::vector<std::string>& vocab, int sentences, uint64_t seed);

// Random multiple-choice items with 2/4/5 options of 1-3 words each.
std::vector<Item> random_items(const std::vector<std::string>& vocab, int n, uint64_t seed);

// The bundled evaluation dataset: 7 conditions x `items_per_condition`
// items with 2/4/5 options and synthetic human counts.
std::vector<Item> bundled_dataset(int items_per_condition, uint64_t seed);

// The condition names used by the bundled dataset.
const std::vector<std::string>& bundled_conditions();

// Items plus an explicit count table built so that, in context, each item's
// target option is strictly the most probable continuation and label "A" is
// strictly the most probable label. Prior contexts carry no counts, so the
// prior distribution is uniform and prior correction preserves the ordering.
// Targets sit at index 0: the label context is shared across items of a
// condition, so a single label must win everywhere.
struct Planted {
  std::vector<Item> items;
  TrigramLm lm;
};
Planted make_planted(int n_items, uint64_t seed);

}  // namespace mcq::synth

#endif  // MCQ_SYNTHETIC_HPP_
