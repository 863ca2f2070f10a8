// Copyright 2026 The Dueling Algorithms Authors
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


#include "dueling/scalar.h"

#include <cctype>

#include "dueling/errors.h"

namespace dueling {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Rational Pow10(int e) {
  Rational r(1);
  for (int i = 0; i < std::abs(e); ++i) r *= 10;
  return e >= 0 ? r : Rational(1) / r;
}

// Decimal literal with optional sign, fraction and exponent, or "a^b".
Rational ParseAtom(std::string_view s) {
  s = Trim(s);
  if (s.empty()) throw DomainError("empty numeric literal");
  if (auto caret = s.find('^'); caret != std::string_view::npos) {
    Rational base = ParseAtom(s.substr(0, caret));
    Rational exp = ParseAtom(s.substr(caret + 1));
    if (denominator(exp) != 1) throw DomainError("non-integer exponent");
    long e = numerator(exp).convert_to<long>();
    Rational r(1);
    for (long i = 0; i < std::labs(e); ++i) r *= base;
    return e >= 0 ? r : Rational(1) / r;
  }
  bool negative = false;
  size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    negative = s[pos] == '-';
    ++pos;
  }
  boost::multiprecision::mpz_int digits = 0;
  int scale = 0;
  bool seen_digit = false;
  bool in_fraction = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      if (in_fraction) --scale;
      seen_digit = true;
    } else if (c == '.' && !in_fraction) {
      in_fraction = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw DomainError("malformed numeric literal: " + std::string(s));
    }
  }
  if (!seen_digit) throw DomainError("malformed numeric literal: " + std::string(s));
  if (pos < s.size()) {
    std::string exponent(s.substr(pos + 1));
    try {
      scale += std::stoi(exponent);
    } catch (const std::exception&) {
      throw DomainError("malformed exponent: " + std::string(s));
    }
  }
  Rational r(digits);
  r *= Pow10(scale);
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  text = Trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = ParseAtom(text.substr(0, slash));
    Rational den = ParseAtom(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator");
    return num / den;
  }
  return ParseAtom(text);
}

std::string FormatRational(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string FormatDyadic(int k) { return "1/2^" + std::to_string(k); }

std::vector<double> ToDoubles(const std::vector<Rational>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.convert_to<double>());
  return out;
}

std::vector<Rational> ToRationals(const std::vector<double>& values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (double v : values) out.emplace_back(v);
  return out;
}

}  // namespace dueling
