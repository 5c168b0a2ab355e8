// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#include "mcq/util/toml.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "mcq/util/errors.hpp"
#include "mcq/util/strings.hpp"

namespace mcq::toml {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw ConfigError(origin + ":" + std::to_string(line) + ": " + msg);
}

struct Cursor {
  const std::string& s;
  size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  void skip_ws() {
    while (!done() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
};

std::string parse_basic_string(Cursor& c, const std::string& origin, int line) {
  // c.peek() == '"'
  ++c.i;
  std::string out;
  while (true) {
    if (c.done()) fail(origin, line, "unterminated string");
    char ch = c.s[c.i++];
    if (ch == '"') return out;
    if (ch == '\\') {
      if (c.done()) fail(origin, line, "dangling escape");
      char e = c.s[c.i++];
      switch (e) {
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        default: fail(origin, line, std::string("unsupported escape \\") + e);
      }
    } else {
      out.push_back(ch);
    }
  }
}

Value::Scalar parse_scalar(Cursor& c, const std::string& origin, int line) {
  c.skip_ws();
  if (c.done()) fail(origin, line, "missing value");
  if (c.peek() == '"') return parse_basic_string(c, origin, line);
  // bare token up to delimiter
  size_t b = c.i;
  while (!c.done() && c.peek() != ',' && c.peek() != ']' && c.peek() != ' ' && c.peek() != '\t')
    ++c.i;
  std::string tok = c.s.substr(b, c.i - b);
  if (tok == "true") return true;
  if (tok == "false") return false;
  if (tok.empty()) fail(origin, line, "missing value");
  bool is_float = tok.find_first_of(".eE") != std::string::npos;
  try {
    size_t pos = 0;
    if (is_float) {
      double d = std::stod(tok, &pos);
      if (pos != tok.size()) fail(origin, line, "bad number '" + tok + "'");
      return d;
    }
    int64_t v = std::stoll(tok, &pos);
    if (pos != tok.size()) fail(origin, line, "bad number '" + tok + "'");
    return v;
  } catch (const std::exception&) {
    fail(origin, line, "bad value '" + tok + "'");
  }
}

std::string type_name(const Value::Scalar& s) {
  switch (s.index()) {
    case 0: return "string";
    case 1: return "integer";
    case 2: return "float";
    default: return "boolean";
  }
}

}  // namespace

Table Table::parse(const std::string& text, const std::string& origin) {
  Table t;
  t.origin_ = origin;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    // strip comment outside quotes
    std::string line;
    bool in_str = false;
    for (size_t i = 0; i < raw.size(); ++i) {
      char ch = raw[i];
      if (ch == '"' && (i == 0 || raw[i - 1] != '\\')) in_str = !in_str;
      if (ch == '#' && !in_str) break;
      line.push_back(ch);
    }
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(origin, lineno, "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) fail(origin, lineno, "empty section name");
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(origin, lineno, "expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) fail(origin, lineno, "empty key");
    std::string full = section.empty() ? key : section + "." + key;
    if (t.values_.count(full)) fail(origin, lineno, "duplicate key '" + full + "'");

    std::string rhs = trim(line.substr(eq + 1));
    Cursor c{rhs, 0};
    Value v;
    c.skip_ws();
    if (c.done()) fail(origin, lineno, "missing value for '" + full + "'");
    if (c.peek() == '[') {
      v.is_array = true;
      ++c.i;
      c.skip_ws();
      if (!c.done() && c.peek() == ']') {
        ++c.i;
      } else {
        while (true) {
          v.items.push_back(parse_scalar(c, origin, lineno));
          c.skip_ws();
          if (c.done()) fail(origin, lineno, "unterminated array");
          if (c.peek() == ',') {
            ++c.i;
            c.skip_ws();
            continue;
          }
          if (c.peek() == ']') {
            ++c.i;
            break;
          }
          fail(origin, lineno, "expected ',' or ']' in array");
        }
      }
    } else {
      v.items.push_back(parse_scalar(c, origin, lineno));
    }
    c.skip_ws();
    if (!c.done()) fail(origin, lineno, "trailing characters after value");
    t.values_.emplace(std::move(full), std::move(v));
  }
  return t;
}

Table Table::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

namespace {
const Value& require(const std::map<std::string, Value>& m, const std::string& origin,
                     const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) throw ConfigError(origin + ": missing required key '" + key + "'");
  return it->second;
}

template <typename T>
T scalar_as(const Value& v, const std::string& origin, const std::string& key) {
  if (v.is_array || v.items.size() != 1)
    throw ConfigError(origin + ": key '" + key + "' is an array, expected scalar");
  const auto& s = v.items[0];
  if (!std::holds_alternative<T>(s)) {
    // allow int where float expected
    if constexpr (std::is_same_v<T, double>) {
      if (std::holds_alternative<int64_t>(s)) return static_cast<double>(std::get<int64_t>(s));
    }
    throw ConfigError(origin + ": key '" + key + "' has type " + type_name(s));
  }
  return std::get<T>(s);
}
}  // namespace

std::string Table::get_string(const std::string& key) const {
  return scalar_as<std::string>(require(values_, origin_, key), origin_, key);
}
int64_t Table::get_int(const std::string& key) const {
  return scalar_as<int64_t>(require(values_, origin_, key), origin_, key);
}
double Table::get_float(const std::string& key) const {
  return scalar_as<double>(require(values_, origin_, key), origin_, key);
}
bool Table::get_bool(const std::string& key) const {
  return scalar_as<bool>(require(values_, origin_, key), origin_, key);
}

std::string Table::get_string(const std::string& key, const std::string& dflt) const {
  return has(key) ? get_string(key) : dflt;
}
int64_t Table::get_int(const std::string& key, int64_t dflt) const {
  return has(key) ? get_int(key) : dflt;
}
double Table::get_float(const std::string& key, double dflt) const {
  return has(key) ? get_float(key) : dflt;
}
bool Table::get_bool(const std::string& key, bool dflt) const {
  return has(key) ? get_bool(key) : dflt;
}

std::vector<std::string> Table::get_string_array(const std::string& key) const {
  const Value& v = require(values_, origin_, key);
  if (!v.is_array) throw ConfigError(origin_ + ": key '" + key + "' is not an array");
  std::vector<std::string> out;
  for (const auto& s : v.items) {
    if (!std::holds_alternative<std::string>(s))
      throw ConfigError(origin_ + ": array '" + key + "' holds a " + type_name(s) +
                        ", expected strings");
    out.push_back(std::get<std::string>(s));
  }
  return out;
}

std::vector<std::string> Table::get_string_array(const std::string& key,
                                                 const std::vector<std::string>& dflt) const {
  return has(key) ? get_string_array(key) : dflt;
}

std::vector<int64_t> Table::get_int_array(const std::string& key,
                                          const std::vector<int64_t>& dflt) const {
  if (!has(key)) return dflt;
  const Value& v = values_.at(key);
  if (!v.is_array) throw ConfigError(origin_ + ": key '" + key + "' is not an array");
  std::vector<int64_t> out;
  for (const auto& s : v.items) {
    if (!std::holds_alternative<int64_t>(s))
      throw ConfigError(origin_ + ": array '" + key + "' holds a " + type_name(s) +
                        ", expected integers");
    out.push_back(std::get<int64_t>(s));
  }
  return out;
}

std::vector<std::string> Table::keys_with_prefix(const std::string& prefix) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_)
    if (k.rfind(prefix, 0) == 0) out.push_back(k);
  return out;
}

}  // namespace mcq::toml
