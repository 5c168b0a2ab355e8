// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_UTIL_HASH_HPP_
#define MCQ_UTIL_HASH_HPP_

#include <cstdint>
#include <filesystem>
#include <string>

namespace mcq {

// FNV-1a. Used for toy embedding buckets; must be identical on every
// platform, so std::hash is not an option.
constexpr uint64_t fnv1a64(const std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Hex-encoded SHA-256 (OpenSSL). Content-hash keys for the response cache
// and run manifests.
std::string sha256_hex(const std::string& data);
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace mcq

#endif  // MCQ_UTIL_HASH_HPP_
