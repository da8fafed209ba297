// Copyright 2026 The pcover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCOVER_RATIONAL_H_
#define PCOVER_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace pcover {

// Exact arbitrary-precision rational, always in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  // Accepts "a" or "a/b" with optional leading '-'; b must be positive.
  static std::optional<Rational> Parse(std::string_view text);

  // "a" for integers, "a/b" otherwise.
  std::string ToString() const { return value_.get_str(); }
  double ToDouble() const { return value_.get_d(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  const mpq_class& mpq() const { return value_; }

  // Smallest integer >= value.
  Rational Ceil() const;
  Rational Floor() const;
  Rational Abs() const { return Rational(abs(value_)); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  // Division by zero is a programming error and throws.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  mpq_class value_;
};

inline const Rational& Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

// 3^e as an exact rational; e may be negative.
Rational PowerOfThree(int e);

}  // namespace pcover

#endif  // PCOVER_RATIONAL_H_
