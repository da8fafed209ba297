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

#ifndef PCOVER_DELTA_RATIONAL_H_
#define PCOVER_DELTA_RATIONAL_H_

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "pcover/rational.h"

namespace pcover {

// value + delta_coeff * d for a formal infinitesimal d > 0. Ordered
// lexicographically, which agrees with numeric order for every small enough
// concrete d. The coefficient is kept rational; integrality is not assumed.
class DeltaRational {
 public:
  DeltaRational() = default;
  DeltaRational(Rational value) : value_(std::move(value)) {}  // NOLINT
  DeltaRational(Rational value, Rational delta_coeff)
      : value_(std::move(value)), delta_(std::move(delta_coeff)) {}

  const Rational& value() const { return value_; }
  const Rational& delta_coeff() const { return delta_; }

  bool is_zero() const { return value_.is_zero() && delta_.is_zero(); }
  bool is_positive() const {
    return value_.sign() > 0 || (value_.is_zero() && delta_.sign() > 0);
  }
  bool is_negative() const {
    return value_.sign() < 0 || (value_.is_zero() && delta_.sign() < 0);
  }

  // Substitutes a concrete d.
  Rational EvaluateAt(const Rational& d) const { return value_ + delta_ * d; }

  // "v" when the coefficient is zero, otherwise "v+cd" / "v-cd".
  std::string ToString() const;

  DeltaRational& operator+=(const DeltaRational& o) {
    value_ += o.value_;
    delta_ += o.delta_;
    return *this;
  }
  DeltaRational& operator-=(const DeltaRational& o) {
    value_ -= o.value_;
    delta_ -= o.delta_;
    return *this;
  }
  DeltaRational& operator*=(const Rational& s) {
    value_ *= s;
    delta_ *= s;
    return *this;
  }

  friend DeltaRational operator+(DeltaRational a, const DeltaRational& b) {
    return a += b;
  }
  friend DeltaRational operator-(DeltaRational a, const DeltaRational& b) {
    return a -= b;
  }
  friend DeltaRational operator*(DeltaRational a, const Rational& s) {
    return a *= s;
  }
  friend DeltaRational operator*(const Rational& s, DeltaRational a) {
    return a *= s;
  }
  friend DeltaRational operator-(const DeltaRational& a) {
    return DeltaRational(-a.value_, -a.delta_);
  }

  friend bool operator==(const DeltaRational& a, const DeltaRational& b) {
    return a.value_ == b.value_ && a.delta_ == b.delta_;
  }
  friend std::strong_ordering operator<=>(const DeltaRational& a,
                                          const DeltaRational& b) {
    if (auto c = a.value_ <=> b.value_; c != 0) return c;
    return a.delta_ <=> b.delta_;
  }

  friend std::ostream& operator<<(std::ostream& os, const DeltaRational& d) {
    return os << d.ToString();
  }

 private:
  Rational value_;
  Rational delta_;
};

// delta_cmp: -1, 0 or 1.
inline int DeltaCompare(const DeltaRational& a, const DeltaRational& b) {
  const auto c = a <=> b;
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

inline const DeltaRational& Min(const DeltaRational& a,
                                const DeltaRational& b) {
  return b < a ? b : a;
}

}  // namespace pcover

#endif  // PCOVER_DELTA_RATIONAL_H_
