// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/cache.hpp"

#include <map>
#include <vector>

#include "mcq/util/hash.hpp"
#include "mcq/util/log.hpp"

namespace mcq {

using nlohmann::json;

ResponseCache::ResponseCache(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  load();
  appender_.open(path_, std::ios::app);
  if (!appender_) throw ConfigError("cache: cannot open for append: " + path_.string());
}

void ResponseCache::load() {
  std::ifstream in(path_);
  if (!in) return;  // fresh cache
  std::string line;
  int lineno = 0;
  int bad = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object() || !rec.contains("key") ||
        !rec.contains("response")) {
      ++bad;
      continue;
    }
    entries_[rec.at("key").get<std::string>()] = std::move(rec);
  }
  if (bad > 0)
    MCQ_WARN("cache %s: skipped %d corrupt line(s); they will be recomputed", path_.c_str(), bad);
}

std::optional<json> ResponseCache::lookup(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return std::make_optional<json>(it->second.at("response"));
}

void ResponseCache::store(const std::string& key, const json& request, const json& response,
                          const std::string& backend_tag) {
  json rec{{"key", key}, {"backend", backend_tag}, {"request", request}, {"response", response}};
  std::unique_lock lock(mutex_);
  appender_ << rec.dump() << "\n";
  appender_.flush();
  entries_[key] = std::move(rec);
}

void ResponseCache::drop(const std::string& key) {
  std::unique_lock lock(mutex_);
  entries_.erase(key);
}

void ResponseCache::compact() {
  std::unique_lock lock(mutex_);
  std::map<std::string, const json*> ordered;
  for (const auto& [k, rec] : entries_) ordered[k] = &rec;
  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ConfigError("cache: cannot write " + tmp.string());
    for (const auto& [k, rec] : ordered) out << rec->dump() << "\n";
  }
  appender_.close();
  std::filesystem::rename(tmp, path_);
  appender_.open(path_, std::ios::app);
}

size_t ResponseCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

namespace {

class CachedBackend final : public LmBackend {
public:
  CachedBackend(std::shared_ptr<LmBackend> inner, std::shared_ptr<ResponseCache> store)
      : inner_(std::move(inner)), store_(std::move(store)) {
    tag_ = inner_->id() + "@" + inner_->version();
  }

  std::string id() const override { return inner_->id(); }
  std::string version() const override { return inner_->version(); }
  BackendCapabilities capabilities() const override { return inner_->capabilities(); }

  std::vector<TokenScore> score_continuation(const std::string& prompt,
                                             const std::string& continuation) override {
    json request{{"prompt", prompt}, {"continuation", continuation}};
    auto decode = [](const json& response) {
      std::vector<TokenScore> out;
      for (const auto& t : response.at("tokens"))
        out.push_back(TokenScore{t.at("t").get<std::string>(), t.at("lp").get<double>(),
                                 t.at("b").get<size_t>(), t.at("e").get<size_t>()});
      return out;
    };
    return fetch<std::vector<TokenScore>>(
        "score_continuation", request,
        [&] {
          auto scores = inner_->score_continuation(prompt, continuation);
          json arr = json::array();
          for (const auto& s : scores)
            arr.push_back({{"t", s.token_text},
                           {"lp", s.logprob},
                           {"b", s.span_begin},
                           {"e", s.span_end}});
          return json{{"tokens", arr}};
        },
        decode);
  }

  double score_infill(const std::string& prefix, const std::string& suffix,
                      const std::string& infill) override {
    json request{{"prefix", prefix}, {"suffix", suffix}, {"infill", infill}};
    return fetch<double>(
        "score_infill", request,
        [&] { return json{{"logprob", inner_->score_infill(prefix, suffix, infill)}}; },
        [](const json& r) { return r.at("logprob").get<double>(); });
  }

  std::string generate(const std::string& prompt, const GenerationParams& params) override {
    json request{{"prompt", prompt},
                 {"temperature", params.temperature},
                 {"max_tokens", params.max_tokens},
                 {"seed", params.seed}};
    return fetch<std::string>(
        "generate", request,
        [&] { return json{{"text", inner_->generate(prompt, params)}}; },
        [](const json& r) { return r.at("text").get<std::string>(); });
  }

  Embedding embed(const std::string& text) override {
    json request{{"text", text}};
    return fetch<Embedding>(
        "embed", request, [&] { return json{{"v", inner_->embed(text)}}; },
        [](const json& r) { return r.at("v").get<Embedding>(); });
  }

private:
  template <typename T, typename Compute, typename Decode>
  T fetch(const char* op, const json& request, Compute&& compute, Decode&& decode) {
    const std::string key = sha256_hex(std::string(op) + "\n" + tag_ + "\n" + request.dump());
    if (auto hit = store_->lookup(key)) {
      try {
        T value = decode(*hit);
        store_->count_hit();
        return value;
      } catch (const json::exception&) {
        // Undecodable payload: treat as a miss and overwrite below.
        MCQ_WARN("cache: corrupt payload for key %s; recomputing", key.c_str());
        store_->drop(key);
      }
    }
    store_->count_miss();
    json response = compute();
    store_->store(key, request, response, tag_);
    return decode(response);
  }

  std::shared_ptr<LmBackend> inner_;
  std::shared_ptr<ResponseCache> store_;
  std::string tag_;
};

}  // namespace

std::shared_ptr<LmBackend> cached(std::shared_ptr<LmBackend> inner,
                                  std::shared_ptr<ResponseCache> store) {
  return std::make_shared<CachedBackend>(std::move(inner), std::move(store));
}

}  // namespace mcq
