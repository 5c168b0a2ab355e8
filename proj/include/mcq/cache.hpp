// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_CACHE_HPP_
#define MCQ_CACHE_HPP_

#include <atomic>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "nlohmann/json.hpp"

#include "mcq/backend.hpp"

namespace mcq {

// Append-only JSONL store of backend responses keyed by content hash.
// Later records win at load time, so overwriting an entry is just another
// append. Corrupt lines are skipped with a warning and behave as misses.
// Writes are serialized; reads are concurrent.
class ResponseCache {
public:
  explicit ResponseCache(std::filesystem::path path);

  std::optional<nlohmann::json> lookup(const std::string& key) const;
  void store(const std::string& key, const nlohmann::json& request,
             const nlohmann::json& response, const std::string& backend_tag);

  // Drop superseded records by rewriting the log in key order.
  void compact();

  void drop(const std::string& key);

  int64_t hits() const { return hits_.load(); }
  int64_t misses() const { return misses_.load(); }
  void count_hit() const { ++hits_; }
  void count_miss() const { ++misses_; }

  size_t size() const;
  const std::filesystem::path& path() const { return path_; }

private:
  void load();

  std::filesystem::path path_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, nlohmann::json> entries_;  // key -> full record
  std::ofstream appender_;
  mutable std::atomic<int64_t> hits_{0};
  mutable std::atomic<int64_t> misses_{0};
};

// Wraps any backend; identical requests hit the store instead of the inner
// backend. Keys cover the operation name, the canonicalized request, and the
// inner backend's identity + version.
std::shared_ptr<LmBackend> cached(std::shared_ptr<LmBackend> inner,
                                  std::shared_ptr<ResponseCache> store);

}  // namespace mcq

#endif  // MCQ_CACHE_HPP_
