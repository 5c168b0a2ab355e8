// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/util/strings.hpp"

#include <cctype>

#include "nlohmann/json.hpp"

namespace mcq {

static bool is_space(unsigned char c) { return std::isspace(c) != 0; }

std::string to_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string normalize_ws(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  bool in_ws = true;  // suppress leading whitespace
  for (unsigned char c : s) {
    if (is_space(c)) {
      in_ws = true;
    } else {
      if (in_ws && !out.empty()) out.push_back(' ');
      out.push_back(static_cast<char>(c));
      in_ws = false;
    }
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  for (auto& t : split_ws_spans(s)) out.push_back(std::move(t.word));
  return out;
}

std::vector<SpannedWord> split_ws_spans(const std::string& s) {
  std::vector<SpannedWord> out;
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    while (i < n && is_space(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= n) break;
    size_t b = i;
    while (i < n && !is_space(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back(SpannedWord{s.substr(b, i - b), b, i});
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> normalize_tokens(const std::string& s) {
  std::string cleaned;
  cleaned.reserve(s.size());
  for (unsigned char c : s) {
    if (std::ispunct(c)) continue;
    cleaned.push_back(static_cast<char>(std::tolower(c)));
  }
  return split_ws(cleaned);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string fmt_double(double v) {
  // nlohmann emits the shortest round-trip decimal form.
  return nlohmann::json(v).dump();
}

}  // namespace mcq
