// Copyright 2026 the mcqeval authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MCQ_UTIL_RATIONAL_HPP_
#define MCQ_UTIL_RATIONAL_HPP_

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mcq {

// Exact rational with int64 parts. Enough for chance-accuracy arithmetic
// (denominators bounded by lcm(2..8) * item count).
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  Rational() = default;
  Rational(int64_t n, int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    reduce();
  }

  void reduce() {
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Rational operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
  }
  Rational operator/(int64_t k) const { return Rational(num, den * k); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace mcq

#endif  // MCQ_UTIL_RATIONAL_HPP_
