// Copyright 2026 The Hedonic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hedonic/rational.h"

#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace hedonic {
namespace {

using Wide = __int128;

Wide WideAbs(Wide v) { return v < 0 ? -v : v; }

Wide WideGcd(Wide a, Wide b) {
  a = WideAbs(a);
  b = WideAbs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool FitsInt64(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::int64_t ParseInteger(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not a rational number: \"" +
                                std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  *this = FromWide(numerator, denominator);
}

Rational Rational::FromWide(Wide numerator, Wide denominator) {
  if (denominator == 0) throw std::domain_error("division by zero");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Wide g = WideGcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (!FitsInt64(numerator) || !FitsInt64(denominator)) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::Parse(std::string_view text) {
  std::string_view s = Trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInteger(s, text));
  std::int64_t num = ParseInteger(Trim(s.substr(0, slash)), text);
  std::int64_t den = ParseInteger(Trim(s.substr(slash + 1)), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in \"" + std::string(text) +
                                "\"");
  }
  return Rational(num, den);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational::FromWide(Wide(a.num_) + b.num_, a.den_);
  return Rational::FromWide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                            Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational::FromWide(Wide(a.num_) - b.num_, a.den_);
  return Rational::FromWide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                            Wide(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::FromWide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return Rational::FromWide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

Rational Rational::operator-() const { return FromWide(-Wide(num_), den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.ToString();
}

}  // namespace hedonic
