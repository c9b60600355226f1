// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcert/real.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace plc {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Directed conversion of a 64-bit integer to binary64.
double int_down(std::int64_t n) {
  double d = static_cast<double>(n);
  if (static_cast<__int128>(d) > static_cast<__int128>(n)) d = std::nextafter(d, -HUGE_VAL);
  return d;
}

double int_up(std::int64_t n) {
  double d = static_cast<double>(n);
  if (static_cast<__int128>(d) < static_cast<__int128>(n)) d = std::nextafter(d, HUGE_VAL);
  return d;
}

}  // namespace

std::optional<Rational> Rational::make(__int128 num, __int128 den) {
  if (den == 0) return std::nullopt;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || num < -kMax || den > kMax) return std::nullopt;
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

RealInterval Rational::enclose() const {
  RealInterval n(int_down(num_), int_up(num_));
  RealInterval d(int_down(den_), int_up(den_));
  return n / d;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> add(const Rational& a, const Rational& b) {
  return Rational::make(static_cast<__int128>(a.num()) * b.den() + static_cast<__int128>(b.num()) * a.den(),
                        static_cast<__int128>(a.den()) * b.den());
}

std::optional<Rational> sub(const Rational& a, const Rational& b) {
  return Rational::make(static_cast<__int128>(a.num()) * b.den() - static_cast<__int128>(b.num()) * a.den(),
                        static_cast<__int128>(a.den()) * b.den());
}

std::optional<Rational> mul(const Rational& a, const Rational& b) {
  return Rational::make(static_cast<__int128>(a.num()) * b.num(), static_cast<__int128>(a.den()) * b.den());
}

std::optional<Rational> div(const Rational& a, const Rational& b) {
  if (b.is_zero()) return std::nullopt;
  return Rational::make(static_cast<__int128>(a.num()) * b.den(), static_cast<__int128>(a.den()) * b.num());
}

int compare(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num()) * b.den();
  __int128 r = static_cast<__int128>(b.num()) * a.den();
  return l < r ? -1 : (l > r ? 1 : 0);
}

RealInterval ExactForm::enclose() const {
  if (k.is_zero()) return r.enclose();
  return r.enclose() + k.enclose() * RealInterval::e();
}

std::string ExactForm::str() const {
  if (k.is_zero()) return r.str();
  std::string s = (k == Rational(1)) ? "e" : (k == Rational(-1) ? "-e" : k.str() + "*e");
  if (r.sign() > 0) s += "+" + r.str();
  if (r.sign() < 0) s += r.str();
  return s;
}

// ---- Real -------------------------------------------------------------------

Real::Real(Rational q) : text_(q.str()), value_(q.enclose()), exact_(ExactForm{q, Rational(0)}) {}

Real Real::from_form(const ExactForm& f) {
  Real r;
  r.text_ = f.str();
  r.value_ = f.enclose();
  r.exact_ = f;
  return r;
}

Real Real::from_interval(const RealInterval& v) {
  Real r;
  if (v.is_point()) {
    // Binary64 values are dyadic rationals; keep them exact when they fit.
    double x = v.lo();
    int ex = 0;
    double m = std::frexp(x, &ex);
    // x = m * 2^ex with 53-bit mantissa
    double mi = std::ldexp(m, 53);
    int shift = ex - 53;
    std::optional<Rational> q;
    if (std::fabs(mi) < 0x1p62 && shift >= -62 && shift <= 0) {
      __int128 num = static_cast<__int128>(static_cast<std::int64_t>(mi));
      __int128 den = static_cast<__int128>(1) << (-shift);
      q = Rational::make(num, den);
    } else if (std::fabs(mi) < 0x1p62 && shift > 0 && shift < 8) {
      q = Rational::make(static_cast<__int128>(static_cast<std::int64_t>(mi)) << shift, 1);
    }
    if (q) return Real(*q);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%a,%a]", v.lo(), v.hi());
  r.text_ = buf;
  r.value_ = v;
  r.exact_.reset();
  return r;
}

std::optional<Rational> Real::rational() const {
  if (exact_ && exact_->k.is_zero()) return exact_->r;
  return std::nullopt;
}

std::string Real::canonical() const {
  if (exact_) return exact_->str();
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%a,%a]", value_.lo(), value_.hi());
  return buf;
}

bool Real::same_value(const Real& o) const {
  if (exact_ && o.exact_) return *exact_ == *o.exact_;
  return value_.is_point() && o.value_.is_point() && value_.lo() == o.value_.lo();
}

namespace {

Real combine(const Real& a, const Real& b, char op) {
  RealInterval v;
  switch (op) {
    case '+': v = a.value() + b.value(); break;
    case '-': v = a.value() - b.value(); break;
    case '*': v = a.value() * b.value(); break;
    default: v = a.value() / b.value(); break;
  }
  const auto& x = a.exact();
  const auto& y = b.exact();
  if (x && y) {
    std::optional<Rational> r, k;
    switch (op) {
      case '+':
        r = add(x->r, y->r);
        k = add(x->k, y->k);
        break;
      case '-':
        r = sub(x->r, y->r);
        k = sub(x->k, y->k);
        break;
      case '*':
        if (x->k.is_zero()) {
          r = mul(x->r, y->r);
          k = mul(x->r, y->k);
        } else if (y->k.is_zero()) {
          r = mul(x->r, y->r);
          k = mul(x->k, y->r);
        }
        break;
      default:
        if (y->k.is_zero() && !y->r.is_zero()) {
          r = div(x->r, y->r);
          k = div(x->k, y->r);
        }
        break;
    }
    if (r && k) return Real::from_form({*r, *k});
  }
  return Real::from_interval(v);
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view s) : s_(s) {}

  Real run() {
    Real v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::kParseError, "bad real literal '" + std::string(s_) + "': " + what + " at offset " +
                                       std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Real expr() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Real v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }

  Real term() {
    Real v = factor();
    for (;;) {
      if (eat('*')) v = v * factor();
      else if (eat('/')) {
        Real d = factor();
        if (d.value().contains_zero()) fail("division by zero");
        v = v / d;
      } else return v;
    }
  }

  Real factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Real v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (c == '[') {
      ++pos_;
      double lo = number_value();
      if (!eat(',')) fail("missing ',' in interval literal");
      double hi = number_value();
      if (!eat(']')) fail("missing ']'");
      if (!(lo <= hi)) fail("empty interval literal");
      return Real::from_interval(RealInterval(lo, hi));
    }
    if (s_.substr(pos_, 4) == "log(") {
      pos_ += 4;
      Real v = expr();
      if (!eat(')')) fail("missing ')'");
      if (!(v.value().lo() > 0)) fail("log of a non-positive value");
      if (auto q = v.rational(); q && *q == Rational(1)) return Real(0);
      return Real::from_interval(log(v.value()));
    }
    if (s_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return Real::from_interval(RealInterval::pi());
    }
    if (c == 'e') {
      ++pos_;
      return Real::euler();
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    return decimal();
  }

  // Raw binary64 value, used inside interval literals (hex floats allowed).
  double number_value() {
    skip();
    const char* begin = s_.data() + pos_;
    std::string tmp(begin, s_.size() - pos_);
    char* end = nullptr;
    double v = std::strtod(tmp.c_str(), &end);
    if (end == tmp.c_str()) fail("expected number");
    pos_ += static_cast<std::size_t>(end - tmp.c_str());
    return v;
  }

  Real decimal() {
    std::size_t start = pos_;
    __int128 mant = 0;
    int scale = 0;
    bool overflow = false;
    bool digits = false;
    auto take_digit = [&](char d, bool frac) {
      digits = true;
      if (mant < (static_cast<__int128>(1) << 100)) {
        mant = mant * 10 + (d - '0');
        if (frac) --scale;
      } else {
        overflow = true;
        if (!frac) ++scale;
      }
    };
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) take_digit(s_[pos_++], false);
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) take_digit(s_[pos_++], true);
    }
    if (!digits) fail("expected number");
    // Exponent only when followed by digits, so "2e" is not swallowed.
    if (pos_ + 1 < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
      if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
        pos_ = q;
        bool neg = s_[pos_ - 1] == '-';
        int ex = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          ex = std::min(ex * 10 + (s_[pos_] - '0'), 100000);
          ++pos_;
        }
        scale += neg ? -ex : ex;
      }
    }
    std::string lit(s_.substr(start, pos_ - start));
    std::optional<Rational> q;
    if (!overflow && scale > -19 && scale < 19) {
      __int128 p10 = 1;
      for (int i = 0; i < std::abs(scale); ++i) p10 *= 10;
      q = scale >= 0 ? Rational::make(mant * p10, 1) : Rational::make(mant, p10);
    }
    if (q) return Real(*q);
    double v = std::strtod(lit.c_str(), nullptr);
    if (!std::isfinite(v)) fail("number out of range");
    return Real::from_interval(RealInterval(std::nextafter(v, -HUGE_VAL), std::nextafter(v, HUGE_VAL)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Real Real::parse(std::string_view text) {
  Real v = LiteralParser(text).run();
  v.text_ = std::string(text);
  return v;
}

Real operator+(const Real& a, const Real& b) { return combine(a, b, '+'); }
Real operator-(const Real& a, const Real& b) { return combine(a, b, '-'); }
Real operator*(const Real& a, const Real& b) { return combine(a, b, '*'); }
Real operator/(const Real& a, const Real& b) {
  if (b.value().contains_zero()) throw Error(Errc::kDivisorContainsZero, "division by " + b.text());
  return combine(a, b, '/');
}
Real operator-(const Real& a) { return combine(Real(0), a, '-'); }

}  // namespace plc
