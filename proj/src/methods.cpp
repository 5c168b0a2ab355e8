// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/methods.hpp"

#include <cmath>
#include <map>

#include "mcq/scores.hpp"

namespace mcq {

using nlohmann::json;

std::string method_name(Method m) {
  switch (m) {
    case Method::StringScoring: return "string_scoring";
    case Method::LabelScoring: return "label_scoring";
    case Method::Rating: return "rating";
    case Method::EmbeddingSimilarity: return "embedding_similarity";
    case Method::FreeGeneration: return "free_generation";
  }
  throw std::logic_error("unreachable method");
}

Method method_from_string(const std::string& s) {
  if (s == "string_scoring") return Method::StringScoring;
  if (s == "label_scoring") return Method::LabelScoring;
  if (s == "rating") return Method::Rating;
  if (s == "embedding_similarity") return Method::EmbeddingSimilarity;
  if (s == "free_generation") return Method::FreeGeneration;
  throw ConfigError("unknown method '" + s + "'");
}

std::string ScoreKind::name() const {
  switch (kind) {
    case Kind::OptionProb: return "option_prob";
    case Kind::AvgOptionProb: return "avg_option_prob";
    case Kind::AvgNegSurprisal: return "avg_neg_surprisal";
    case Kind::PriorCorrectedProb: return "prior_corrected_prob";
    case Kind::SurprisalReductionFactor: return "surprisal_reduction_factor";
    case Kind::LabelProb: return "label_prob";
    case Kind::PriorCorrectedLabelProb: return "prior_corrected_label_prob";
    case Kind::LabelSurprisalReductionFactor: return "label_surprisal_reduction_factor";
    case Kind::RatingAggregation: return "rating_aggregation:" + scale_concept;
    case Kind::EmbeddingSimilarity: return "embedding_similarity";
    case Kind::FreeGeneration: return "free_generation";
  }
  throw std::logic_error("unreachable score kind");
}

ScoreKind ScoreKind::from_name(const std::string& name) {
  static const std::map<std::string, Kind> plain{
      {"option_prob", Kind::OptionProb},
      {"avg_option_prob", Kind::AvgOptionProb},
      {"avg_neg_surprisal", Kind::AvgNegSurprisal},
      {"prior_corrected_prob", Kind::PriorCorrectedProb},
      {"surprisal_reduction_factor", Kind::SurprisalReductionFactor},
      {"label_prob", Kind::LabelProb},
      {"prior_corrected_label_prob", Kind::PriorCorrectedLabelProb},
      {"label_surprisal_reduction_factor", Kind::LabelSurprisalReductionFactor},
      {"embedding_similarity", Kind::EmbeddingSimilarity},
      {"free_generation", Kind::FreeGeneration},
  };
  auto it = plain.find(name);
  if (it != plain.end()) return ScoreKind{it->second, ""};
  const std::string prefix = "rating_aggregation:";
  if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size())
    return ScoreKind{Kind::RatingAggregation, name.substr(prefix.size())};
  throw ConfigError("unknown score kind '" + name + "'");
}

Method method_of(ScoreKind::Kind kind) {
  switch (kind) {
    case ScoreKind::Kind::OptionProb:
    case ScoreKind::Kind::AvgOptionProb:
    case ScoreKind::Kind::AvgNegSurprisal:
    case ScoreKind::Kind::PriorCorrectedProb:
    case ScoreKind::Kind::SurprisalReductionFactor:
      return Method::StringScoring;
    case ScoreKind::Kind::LabelProb:
    case ScoreKind::Kind::PriorCorrectedLabelProb:
    case ScoreKind::Kind::LabelSurprisalReductionFactor:
      return Method::LabelScoring;
    case ScoreKind::Kind::RatingAggregation:
      return Method::Rating;
    case ScoreKind::Kind::EmbeddingSimilarity:
      return Method::EmbeddingSimilarity;
    case ScoreKind::Kind::FreeGeneration:
      return Method::FreeGeneration;
  }
  throw std::logic_error("unreachable score kind");
}

std::vector<ScoreKind> score_kinds_for(Method m, const std::vector<std::string>& rating_concepts) {
  using K = ScoreKind::Kind;
  switch (m) {
    case Method::StringScoring:
      return {{K::OptionProb, ""},
              {K::AvgOptionProb, ""},
              {K::AvgNegSurprisal, ""},
              {K::PriorCorrectedProb, ""},
              {K::SurprisalReductionFactor, ""}};
    case Method::LabelScoring:
      // Length-corrected label analogues collapse into the label probability,
      // so only types (1), (4) and (5) exist for labels.
      return {{K::LabelProb, ""},
              {K::PriorCorrectedLabelProb, ""},
              {K::LabelSurprisalReductionFactor, ""}};
    case Method::Rating: {
      std::vector<ScoreKind> out;
      for (const auto& c : rating_concepts) out.push_back({K::RatingAggregation, c});
      return out;
    }
    case Method::EmbeddingSimilarity:
      return {{K::EmbeddingSimilarity, ""}};
    case Method::FreeGeneration:
      return {{K::FreeGeneration, ""}};
  }
  throw std::logic_error("unreachable method");
}

json method_result_to_json(const MethodResult& r) {
  json j;
  j["item_id"] = r.item_id;
  j["method"] = method_name(method_of(r.score_kind.kind));
  j["score_kind"] = r.score_kind.name();
  j["per_option_scores"] = r.per_option_scores;
  if (r.chosen_index) j["chosen_index"] = *r.chosen_index;
  else j["chosen_index"] = nullptr;
  j["tie"] = r.tie;
  j["abstained"] = r.abstained;
  if (!r.generations.empty()) j["generations"] = r.generations;
  j["evidence"] = r.evidence;
  return j;
}

MethodResult method_result_from_json(const json& j) {
  MethodResult r;
  r.item_id = j.at("item_id").get<std::string>();
  r.score_kind = ScoreKind::from_name(j.at("score_kind").get<std::string>());
  r.per_option_scores = j.at("per_option_scores").get<std::vector<double>>();
  if (!j.at("chosen_index").is_null()) r.chosen_index = j.at("chosen_index").get<int>();
  r.tie = j.at("tie").get<bool>();
  r.abstained = j.at("abstained").get<bool>();
  if (j.contains("generations")) r.generations = j.at("generations").get<std::vector<std::string>>();
  if (j.contains("evidence")) r.evidence = j.at("evidence");
  return r;
}

namespace {

json tokens_to_json(const std::vector<TokenScore>& tokens) {
  json arr = json::array();
  for (const auto& t : tokens)
    arr.push_back({{"t", t.token_text}, {"lp", t.logprob}, {"b", t.span_begin}, {"e", t.span_end}});
  return arr;
}

std::vector<TokenScore> scored_option(const PromptBundle& bundle, const std::string& prompt,
                                      const std::string& text, LmBackend& backend) {
  return backend.score_continuation(prompt, bundle.continuation_prefix + text);
}

[[noreturn]] void rethrow_with_context(const std::string& item_id, const std::string& what,
                                       const std::exception& e) {
  throw BackendError("item '" + item_id + "', " + what + ": " + e.what());
}

}  // namespace

double option_log_prob(const PromptBundle& bundle, const std::string& option,
                       LmBackend& backend) {
  return total_logprob(scored_option(bundle, bundle.string_prompt, option, backend));
}

double prior_option_log_prob(const PromptBundle& bundle, const std::string& option,
                             LmBackend& backend) {
  return total_logprob(scored_option(bundle, bundle.string_prior_prompt, option, backend));
}

std::vector<double> label_scores(const PromptBundle& bundle, LmBackend& backend,
                                 LabelCorrection correction) {
  std::vector<double> out;
  for (const auto& label : bundle.labels) {
    double cond = total_logprob(scored_option(bundle, bundle.label_prompt, label, backend));
    if (correction == LabelCorrection::None) {
      out.push_back(cond);
      continue;
    }
    double prior = total_logprob(scored_option(bundle, bundle.label_prior_prompt, label, backend));
    out.push_back(correction == LabelCorrection::PriorRatio
                      ? prior_corrected_logprob(cond, prior)
                      : surprisal_reduction_factor(cond, prior));
  }
  return out;
}

double rating_aggregation(const PromptBundle& bundle, size_t option_index,
                          const RatingScale& scale, LmBackend& backend) {
  auto prompts = bundle.rating_prompts.find(scale.concept_name);
  if (prompts == bundle.rating_prompts.end())
    throw std::invalid_argument("rating_aggregation: no prompts for scale concept '" +
                                scale.concept_name + "'");
  const std::string& prompt = prompts->second.at(option_index);
  std::vector<double> masses;
  masses.reserve(scale.point_labels.size());
  for (const auto& label : scale.point_labels) {
    double lp = total_logprob(scored_option(bundle, prompt, label, backend));
    masses.push_back(std::exp(lp));
  }
  return rating_weighted_mean(masses);
}

double embedding_similarity(const PromptBundle& bundle, const std::string& option,
                            LmBackend& backend) {
  Embedding prompt_e = backend.embed(bundle.string_prompt);
  Embedding option_e = backend.embed(option);
  try {
    return cosine_similarity(prompt_e, option_e);
  } catch (const std::domain_error&) {
    throw BackendError("embedding_similarity: zero-norm embedding for prompt or option '" +
                       option + "'");
  }
}

namespace {

MethodResult string_scoring_result(const Item& item, const PromptBundle& bundle,
                                   const ScoreKind& kind, LmBackend& backend) {
  using K = ScoreKind::Kind;
  const bool needs_prior =
      kind.kind == K::PriorCorrectedProb || kind.kind == K::SurprisalReductionFactor;

  MethodResult r;
  json cond_ev = json::array();
  json prior_ev = json::array();
  for (size_t j = 0; j < item.options.size(); ++j) {
    const std::string& option = item.options[j];
    std::vector<TokenScore> cond;
    try {
      cond = scored_option(bundle, bundle.string_prompt, option, backend);
    } catch (const std::exception& e) {
      rethrow_with_context(item.id, "option " + std::to_string(j), e);
    }
    cond_ev.push_back(tokens_to_json(cond));
    double score = 0.0;
    switch (kind.kind) {
      case K::OptionProb: score = total_logprob(cond); break;
      case K::AvgOptionProb: score = avg_option_prob(cond); break;
      case K::AvgNegSurprisal: score = avg_neg_surprisal(cond); break;
      case K::PriorCorrectedProb:
      case K::SurprisalReductionFactor: {
        std::vector<TokenScore> prior;
        try {
          prior = scored_option(bundle, bundle.string_prior_prompt, option, backend);
        } catch (const std::exception& e) {
          rethrow_with_context(item.id, "option " + std::to_string(j) + " (prior)", e);
        }
        prior_ev.push_back(tokens_to_json(prior));
        if (kind.kind == K::PriorCorrectedProb) {
          score = prior_corrected_logprob(total_logprob(cond), total_logprob(prior));
        } else {
          try {
            score = surprisal_reduction_factor(total_logprob(cond), total_logprob(prior));
          } catch (const std::domain_error& e) {
            rethrow_with_context(item.id, "option " + std::to_string(j), e);
          }
        }
        break;
      }
      default: throw std::logic_error("not a string score");
    }
    r.per_option_scores.push_back(score);
  }
  r.evidence["conditional"] = std::move(cond_ev);
  if (needs_prior) r.evidence["prior"] = std::move(prior_ev);
  return r;
}

MethodResult label_scoring_result(const Item& item, const PromptBundle& bundle,
                                  const ScoreKind& kind, LmBackend& backend) {
  using K = ScoreKind::Kind;
  LabelCorrection correction = LabelCorrection::None;
  if (kind.kind == K::PriorCorrectedLabelProb) correction = LabelCorrection::PriorRatio;
  if (kind.kind == K::LabelSurprisalReductionFactor) correction = LabelCorrection::Srf;

  MethodResult r;
  try {
    r.per_option_scores = label_scores(bundle, backend, correction);
  } catch (const std::exception& e) {
    rethrow_with_context(item.id, "label scoring", e);
  }
  r.evidence["labels"] = bundle.labels;
  return r;
}

MethodResult rating_result(const Item& item, const PromptBundle& bundle, const ScoreKind& kind,
                           LmBackend& backend, const RunParams& params) {
  RatingScale scale;
  scale.concept_name = kind.scale_concept;
  scale.point_labels = params.rating_labels;

  MethodResult r;
  for (size_t j = 0; j < item.options.size(); ++j) {
    try {
      r.per_option_scores.push_back(rating_aggregation(bundle, j, scale, backend));
    } catch (const std::exception& e) {
      rethrow_with_context(item.id, "rating option " + std::to_string(j), e);
    }
  }
  r.evidence["concept"] = kind.scale_concept;
  return r;
}

MethodResult embedding_result(const Item& item, const PromptBundle& bundle, LmBackend& backend) {
  MethodResult r;
  for (size_t j = 0; j < item.options.size(); ++j) {
    try {
      r.per_option_scores.push_back(embedding_similarity(bundle, item.options[j], backend));
    } catch (const std::exception& e) {
      rethrow_with_context(item.id, "embedding option " + std::to_string(j), e);
    }
  }
  return r;
}

MethodResult free_generation_result(const Item& item, const PromptBundle& bundle,
                                    LmBackend& backend, const RunParams& params) {
  MethodResult r;
  std::map<int, int> votes;
  json gen_ev = json::array();
  for (int64_t seed : params.seeds) {
    GenerationParams gp = params.generation;
    gp.seed = seed;
    std::string text;
    try {
      text = backend.generate(bundle.string_prompt, gp);
    } catch (const std::exception& e) {
      rethrow_with_context(item.id, "generation seed " + std::to_string(seed), e);
    }
    auto classified = classify_generation(text, item, params.f1_threshold);
    if (classified) ++votes[*classified];
    gen_ev.push_back({{"seed", seed},
                      {"text", text},
                      {"classified", classified ? json(*classified) : json(nullptr)}});
    r.generations.push_back(std::move(text));
  }
  int best_index = -1, best_count = 0;
  bool tie = false;
  for (const auto& [index, count] : votes) {
    if (count > best_count) {
      best_count = count;
      best_index = index;
      tie = false;
    } else if (count == best_count) {
      tie = true;
    }
  }
  if (best_index >= 0 && !tie) {
    r.chosen_index = best_index;
  } else {
    r.abstained = true;
  }
  r.evidence["generations"] = std::move(gen_ev);
  return r;
}

}  // namespace

MethodResult run_method(const Item& item, const PromptBundle& bundle, const ScoreKind& kind,
                        LmBackend& backend, const RunParams& params) {
  using K = ScoreKind::Kind;
  const Method method = method_of(kind.kind);
  const BackendCapabilities caps = backend.capabilities();
  auto need = [&](bool flag, const char* name) {
    if (!flag) throw CapabilityError(backend.id() + ": capability: " + name);
  };
  switch (method) {
    case Method::StringScoring:
    case Method::LabelScoring:
    case Method::Rating:
      need(caps.conditional_scoring, "conditional_scoring");
      break;
    case Method::EmbeddingSimilarity: need(caps.embeddings, "embeddings"); break;
    case Method::FreeGeneration: need(caps.generation, "generation"); break;
  }

  MethodResult r;
  switch (method) {
    case Method::StringScoring: r = string_scoring_result(item, bundle, kind, backend); break;
    case Method::LabelScoring: r = label_scoring_result(item, bundle, kind, backend); break;
    case Method::Rating: r = rating_result(item, bundle, kind, backend, params); break;
    case Method::EmbeddingSimilarity: r = embedding_result(item, bundle, backend); break;
    case Method::FreeGeneration:
      r = free_generation_result(item, bundle, backend, params);
      break;
  }
  r.item_id = item.id;
  r.score_kind = kind;
  if (kind.kind != K::FreeGeneration) {
    bool tied = false;
    r.chosen_index = static_cast<int>(argmax_lowest_index(r.per_option_scores, &tied));
    r.tie = tied;
  }
  return r;
}

}  // namespace mcq
