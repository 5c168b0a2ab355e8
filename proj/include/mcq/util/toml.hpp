// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0
//
// Minimal TOML-subset reader: [section] headers (dotted ok), key = value
// with basic strings, integers, floats, booleans, and single-line arrays
// of those scalars. Covers the config and template files; not a general
// TOML implementation.

#ifndef MCQ_UTIL_TOML_HPP_
#define MCQ_UTIL_TOML_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace mcq::toml {

struct Value {
  using Scalar = std::variant<std::string, int64_t, double, bool>;
  bool is_array = false;
  std::vector<Scalar> items;  // exactly one element when !is_array
};

class Table {
public:
  static Table parse(const std::string& text, const std::string& origin);
  static Table parse_file(const std::filesystem::path& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  // Required getters throw ConfigError when missing or mistyped.
  std::string get_string(const std::string& key) const;
  int64_t get_int(const std::string& key) const;
  double get_float(const std::string& key) const;
  bool get_bool(const std::string& key) const;

  std::string get_string(const std::string& key, const std::string& dflt) const;
  int64_t get_int(const std::string& key, int64_t dflt) const;
  double get_float(const std::string& key, double dflt) const;
  bool get_bool(const std::string& key, bool dflt) const;

  std::vector<std::string> get_string_array(const std::string& key) const;
  std::vector<std::string> get_string_array(const std::string& key,
                                            const std::vector<std::string>& dflt) const;
  std::vector<int64_t> get_int_array(const std::string& key,
                                     const std::vector<int64_t>& dflt) const;

  // Full keys ("section.key") that start with the given prefix.
  std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

  const std::map<std::string, Value>& values() const { return values_; }

private:
  std::map<std::string, Value> values_;
  std::string origin_;
};

}  // namespace mcq::toml

#endif  // MCQ_UTIL_TOML_HPP_
