// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_UTIL_STRINGS_HPP_
#define MCQ_UTIL_STRINGS_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace mcq {

std::string to_lower(std::string s);
std::string trim(const std::string& s);

// Collapses runs of whitespace to single spaces and trims the ends.
std::string normalize_ws(const std::string& s);

std::vector<std::string> split_ws(const std::string& s);

// Whitespace token with its half-open byte range in the original string.
struct SpannedWord {
  std::string word;
  size_t begin = 0;
  size_t end = 0;
};
std::vector<SpannedWord> split_ws_spans(const std::string& s);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

// Lowercase, strip punctuation, collapse whitespace, split. The token
// normalization used by generation classification.
std::vector<std::string> normalize_tokens(const std::string& s);

std::string xml_escape(const std::string& s);

// Shortest decimal form that round-trips the double. Stable across runs.
std::string fmt_double(double v);

}  // namespace mcq

#endif  // MCQ_UTIL_STRINGS_HPP_
