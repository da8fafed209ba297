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

#include "pcover/rational.h"

#include <cctype>
#include <cstdlib>

#include "pcover/delta_rational.h"
#include "pcover/error.h"

namespace pcover {

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  }
  value_.canonicalize();
}

std::optional<Rational> Rational::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const size_t slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!AllDigits(num) || !AllDigits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInternal, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::Ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::Floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational PowerOfThree(int e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpq_class(mpz_class(1), p)) : Rational(mpq_class(p));
}

std::string DeltaRational::ToString() const {
  if (delta_.is_zero()) return value_.ToString();
  std::string out = value_.ToString();
  if (delta_.sign() > 0) out += '+';
  out += delta_.ToString();
  out += 'd';
  return out;
}

bool GuardOverridden() {
  const char* v = std::getenv("PCOVER_GUARD_OVERRIDE");
  return v != nullptr && std::string_view(v) == "1";
}

}  // namespace pcover
