// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "plcert/interval.hpp"

namespace plc {

// Exact rational with 64-bit numerator and positive denominator, always reduced.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT

  static std::optional<Rational> make(__int128 num, __int128 den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  bool is_zero() const { return num_ == 0; }
  RealInterval enclose() const;
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::optional<Rational> add(const Rational& a, const Rational& b);
std::optional<Rational> sub(const Rational& a, const Rational& b);
std::optional<Rational> mul(const Rational& a, const Rational& b);
std::optional<Rational> div(const Rational& a, const Rational& b);
int compare(const Rational& a, const Rational& b);

// r + k*e with rational r, k.
struct ExactForm {
  Rational r;
  Rational k;
  RealInterval enclose() const;
  std::string str() const;
  friend bool operator==(const ExactForm&, const ExactForm&) = default;
};

// A real constant as written by the user, with its enclosure and, when the
// literal is rational or linear in e, its exact value.
class Real {
 public:
  Real() : Real(Rational(0)) {}
  Real(Rational q);  // NOLINT
  Real(std::int64_t n) : Real(Rational(n)) {}  // NOLINT
  Real(int n) : Real(Rational(n)) {}  // NOLINT

  // Grammar: sums and products of decimals, 'e', 'pi', parentheses, and
  // log(...), and interval literals "[lo,hi]". Throws ParseError.
  static Real parse(std::string_view text);
  static Real from_form(const ExactForm& f);
  static Real from_interval(const RealInterval& v);
  static Real euler() { return from_form({Rational(0), Rational(1)}); }

  const std::string& text() const { return text_; }
  const RealInterval& value() const { return value_; }
  const std::optional<ExactForm>& exact() const { return exact_; }
  std::optional<Rational> rational() const;
  // Exact form text when available, else the interval text.
  std::string canonical() const;
  bool same_value(const Real& o) const;

 private:
  std::string text_;
  RealInterval value_;
  std::optional<ExactForm> exact_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);

}  // namespace plc
