// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_METHODS_HPP_
#define MCQ_METHODS_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"

#include "mcq/backend.hpp"
#include "mcq/item.hpp"
#include "mcq/prompts.hpp"

namespace mcq {

enum class Method {
  StringScoring,
  LabelScoring,
  Rating,
  EmbeddingSimilarity,
  FreeGeneration,
};

std::string method_name(Method m);
Method method_from_string(const std::string& s);

// One concrete score within a method family. Rating kinds carry the scale
// concept ("likely", "appropriate", ...).
struct ScoreKind {
  enum class Kind {
    OptionProb,                     // (1) sum of option-token logprobs
    AvgOptionProb,                  // (2) mean token probability
    AvgNegSurprisal,                // (3) mean token logprob
    PriorCorrectedProb,             // (4) logprob minus prior logprob
    SurprisalReductionFactor,       // (5) prior surprisal / conditional surprisal
    LabelProb,                      //     label analogue of (1)
    PriorCorrectedLabelProb,        //     label analogue of (4)
    LabelSurprisalReductionFactor,  //     label analogue of (5)
    RatingAggregation,              // (6) probability-weighted rating
    EmbeddingSimilarity,            // (7) cosine(E(prompt), E(option))
    FreeGeneration,
  };

  Kind kind = Kind::OptionProb;
  std::string scale_concept;  // RatingAggregation only

  std::string name() const;
  static ScoreKind from_name(const std::string& name);

  bool operator==(const ScoreKind& o) const {
    return kind == o.kind && scale_concept == o.scale_concept;
  }
  bool operator<(const ScoreKind& o) const {
    if (kind != o.kind) return kind < o.kind;
    return scale_concept < o.scale_concept;
  }
};

Method method_of(ScoreKind::Kind kind);

// The score kinds a method family expands to. Rating expands to one kind per
// configured scale concept.
std::vector<ScoreKind> score_kinds_for(Method m, const std::vector<std::string>& rating_concepts);

// Five-point scale; point labels map to the values 1..5.
struct RatingScale {
  std::string concept_name;
  std::array<std::string, 5> point_labels{"1", "2", "3", "4", "5"};
};

struct RunParams {
  GenerationParams generation;                // temperature + max_tokens for free generation
  std::vector<int64_t> seeds{1, 2, 3, 4, 5};  // free-generation seeds
  double f1_threshold = 0.5;
  std::array<std::string, 5> rating_labels{"1", "2", "3", "4", "5"};
};

struct MethodResult {
  std::string item_id;
  ScoreKind score_kind;
  std::vector<double> per_option_scores;  // empty for FreeGeneration
  std::optional<int> chosen_index;
  bool tie = false;
  bool abstained = false;  // FreeGeneration only
  std::vector<std::string> generations;
  nlohmann::json evidence;
};

nlohmann::json method_result_to_json(const MethodResult& r);
MethodResult method_result_from_json(const nlohmann::json& j);

// Score (1): total log P(option | string prompt).
double option_log_prob(const PromptBundle& bundle, const std::string& option, LmBackend& backend);
// Same against the prior prompt I_i0.
double prior_option_log_prob(const PromptBundle& bundle, const std::string& option,
                             LmBackend& backend);

enum class LabelCorrection { None, PriorRatio, Srf };

// One score per label, continuing the label prompt at the answer slot.
// Multi-token labels sum their tokens' logprobs.
std::vector<double> label_scores(const PromptBundle& bundle, LmBackend& backend,
                                 LabelCorrection correction);

// Score (6) for one option: renormalized probability-weighted mean of the
// five rating labels, in [1, 5].
double rating_aggregation(const PromptBundle& bundle, size_t option_index,
                          const RatingScale& scale, LmBackend& backend);

// Score (7) for one option.
double embedding_similarity(const PromptBundle& bundle, const std::string& option,
                            LmBackend& backend);

// Dispatches one (item, score kind) work unit and assembles the result with
// raw evidence. Free generation runs every seed and majority-votes the
// classified options; no plurality winner means abstention.
MethodResult run_method(const Item& item, const PromptBundle& bundle, const ScoreKind& kind,
                        LmBackend& backend, const RunParams& params);

}  // namespace mcq

#endif  // MCQ_METHODS_HPP_
