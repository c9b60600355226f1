// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "plcert/error.hpp"

namespace plc {

// Closed real interval [lo, hi] with binary64 endpoints. Every operation
// returns an enclosure of the exact image.
class RealInterval {
 public:
  constexpr RealInterval() = default;
  RealInterval(double x);  // NOLINT: point intervals convert implicitly
  RealInterval(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const;
  double width() const;  // rounded up
  double mag() const;    // max |x|
  double mig() const;    // min |x|

  bool is_point() const { return lo_ == hi_; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RealInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool intersects(const RealInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

  std::string str() const;

  static RealInterval pi();
  static RealInterval half_pi();
  static RealInterval two_pi();
  static RealInterval e();
  static RealInterval entire();

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

RealInterval hull(const RealInterval& a, const RealInterval& b);
// Throws DomainViolation when the intersection is empty.
RealInterval intersect(const RealInterval& a, const RealInterval& b);

RealInterval operator-(const RealInterval& a);
RealInterval operator+(const RealInterval& a, const RealInterval& b);
RealInterval operator-(const RealInterval& a, const RealInterval& b);
RealInterval operator*(const RealInterval& a, const RealInterval& b);
RealInterval operator/(const RealInterval& a, const RealInterval& b);
RealInterval& operator+=(RealInterval& a, const RealInterval& b);
RealInterval& operator-=(RealInterval& a, const RealInterval& b);
RealInterval& operator*=(RealInterval& a, const RealInterval& b);

RealInterval sqr(const RealInterval& a);
RealInterval abs(const RealInterval& a);
RealInterval min(const RealInterval& a, const RealInterval& b);
RealInterval max(const RealInterval& a, const RealInterval& b);
RealInterval exp(const RealInterval& a);
RealInterval log(const RealInterval& a);
RealInterval log1p(const RealInterval& a);
RealInterval sqrt(const RealInterval& a);
RealInterval atan(const RealInterval& a);
RealInterval sin(const RealInterval& a);
RealInterval cos(const RealInterval& a);
// x^p for real p. Integer p uses repeated products; otherwise requires x >= 0.
RealInterval pow_real(const RealInterval& x, double p);
// x^p = exp(p log x) for x > 0, interval exponent.
RealInterval pow(const RealInterval& x, const RealInterval& p);
RealInterval hypot(const RealInterval& a, const RealInterval& b);
// log1p(y)/y for y >= 0, continuous at 0.
RealInterval log1p_over(const RealInterval& y);
// atan(y)/y, even, continuous at 0.
RealInterval atan_over(const RealInterval& y);

// Directed rounding helpers. Each returns a bound on the exact result.
double add_down(double a, double b);
double add_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double div_down(double a, double b);
double div_up(double a, double b);
double sqrt_down(double a);
double sqrt_up(double a);

struct ComplexRect {
  RealInterval re;
  RealInterval im;

  ComplexRect() = default;
  ComplexRect(RealInterval r, RealInterval i = RealInterval(0.0)) : re(r), im(i) {}
  ComplexRect(double r, double i) : re(r), im(i) {}

  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool contains(double r, double i) const { return re.contains(r) && im.contains(i); }
  bool contains(const ComplexRect& o) const { return re.contains(o.re) && im.contains(o.im); }
  std::string str() const;
};

ComplexRect operator-(const ComplexRect& a);
ComplexRect operator+(const ComplexRect& a, const ComplexRect& b);
ComplexRect operator-(const ComplexRect& a, const ComplexRect& b);
ComplexRect operator*(const ComplexRect& a, const ComplexRect& b);
ComplexRect operator*(const RealInterval& a, const ComplexRect& b);
ComplexRect operator/(const ComplexRect& a, const ComplexRect& b);
ComplexRect operator/(const ComplexRect& a, const RealInterval& b);

ComplexRect conj(const ComplexRect& z);
ComplexRect cx_sqr(const ComplexRect& z);
// |z|^2
RealInterval cx_norm(const ComplexRect& z);
RealInterval cx_abs(const ComplexRect& z);
ComplexRect cx_exp(const ComplexRect& z);
// Principal branch. Throws BranchCutViolation if z meets (-inf, 0].
ComplexRect cx_log(const ComplexRect& z);
// Principal argument, same branch cut restriction as cx_log.
RealInterval cx_arg(const ComplexRect& z);
ComplexRect cx_pow_real(const ComplexRect& z, const RealInterval& p);
// Adds a disk of radius r, inflated to its bounding square.
ComplexRect inflate(const ComplexRect& z, double r);

}  // namespace plc
