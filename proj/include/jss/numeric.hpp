// Copyright 2026 The JSS Authors
//
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

// Scalar types used throughout the library.
//
// Every model, solver and condition routine is a template over a Scalar:
// either an exact GMP rational or a double. Exact mode is authoritative for
// thresholds, ties and certification; floating mode is for sweeps and
// simulation.
//
// Note on gmpxx: arithmetic on mpq_class yields expression templates, so
// generic code must bind intermediate results to a named S, never to auto.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <system_error>

#include "jss/error.hpp"

namespace jss {

using Rational = mpq_class;

template <class S>
concept Scalar = std::same_as<S, double> || std::same_as<S, Rational>;

enum class NumericMode { kExact, kFloat };

template <Scalar S>
inline constexpr bool kIsExact = std::same_as<S, Rational>;

// mpq_get_d truncates toward zero (9/10 -> 0.8999999999999999); round
// through a 40 digit decimal instead.
inline double to_double(const Rational& r) {
  const mpf_class f(r, 192);
  char buf[96];
  gmp_snprintf(buf, sizeof(buf), "%.40Fe", f.get_mpf_t());
  return std::strtod(buf, nullptr);
}
inline double to_double(double d) { return d; }

template <Scalar S>
S from_rational(const Rational& r) {
  if constexpr (kIsExact<S>) {
    return r;
  } else {
    return to_double(r);
  }
}

// Exact conversion of a finite double (every double is a dyadic rational).
inline Rational exact_from_double(double d) {
  Rational r(d);
  return r;
}

// Relative tolerance used to decide ties between floating point payoffs.
inline constexpr double kFloatTieTolerance = 1e-12;

template <Scalar S>
bool tied(const S& x, const S& y) {
  if constexpr (kIsExact<S>) {
    return x == y;
  } else {
    const double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
    return std::fabs(x - y) <= kFloatTieTolerance * scale;
  }
}

// Strictly greater, beyond tie tolerance.
template <Scalar S>
bool clearly_greater(const S& x, const S& y) {
  return x > y && !tied(x, y);
}

namespace detail {

inline mpz_class pow10(unsigned long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, exponent);
  return p;
}

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
           return ch >= '0' && ch <= '9';
         });
}

inline Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) {
      throw InvalidInstanceError("malformed exponent in number '" +
                                 std::string(whole) + "'");
    }
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) ||
      (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw InvalidInstanceError("malformed number '" + std::string(whole) + "'");
  }
  std::string digits(int_part);
  digits.append(frac_part);
  mpz_class numerator(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  Rational value;
  if (exponent >= 0) {
    value = Rational(numerator * pow10(static_cast<unsigned long>(exponent)));
  } else {
    value = Rational(numerator, pow10(static_cast<unsigned long>(-exponent)));
    value.canonicalize();
  }
  if (negative) value = -value;
  return value;
}

}  // namespace detail

// Parses "17/29", "-3", "0.2", "2.5e-3" exactly. Decimal strings are read as
// decimal fractions, never through binary floating point.
inline Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw InvalidInstanceError("empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = detail::parse_decimal(text.substr(0, slash), whole);
    const Rational den = detail::parse_decimal(text.substr(slash + 1), whole);
    if (den == 0) {
      throw InvalidInstanceError("zero denominator in '" + std::string(whole) +
                                 "'");
    }
    Rational q = num / den;
    return q;
  }
  return detail::parse_decimal(text, whole);
}

// Canonical fraction string: "17/29", "5", "-1/2".
inline std::string to_fraction_string(const Rational& r) { return r.get_str(); }

// Shortest decimal that round-trips the double.
inline std::string to_decimal_string(double d) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, result.ptr);
}

template <Scalar S>
std::string to_display_string(const S& value) {
  if constexpr (kIsExact<S>) {
    return to_fraction_string(value);
  } else {
    return to_decimal_string(value);
  }
}

}  // namespace jss
