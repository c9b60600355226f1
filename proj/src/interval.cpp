// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcert/interval.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>

namespace plc {

namespace {

#include "constants_table.inc"

constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude FMA residuals may be inexact (subnormal range).
constexpr double kTiny = 0x1p-960;

inline double up1(double x) { return std::nextafter(x, kInf); }
inline double down1(double x) { return std::nextafter(x, -kInf); }
// Transcendental results from libm are nudged two ulps.
inline double up2(double x) { return up1(up1(x)); }
inline double down2(double x) { return down1(down1(x)); }

[[noreturn]] void domain(const char* what) { throw Error(Errc::kDomainViolation, what); }

}  // namespace

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::kDivisorContainsZero: return "DivisorContainsZero";
    case Errc::kDomainViolation: return "DomainViolation";
    case Errc::kBranchCutViolation: return "BranchCutViolation";
    case Errc::kPoleProximity: return "PoleProximity";
    case Errc::kBadBuilderParams: return "BadBuilderParams";
    case Errc::kParseError: return "ParseError";
    case Errc::kSchemaError: return "SchemaError";
    case Errc::kNoTailLemma: return "NoTailLemma";
    case Errc::kMissingGrowthAttestation: return "MissingGrowthAttestation";
    case Errc::kStatusNotCertified: return "StatusNotCertified";
    case Errc::kUnreachable: return "Unreachable";
    case Errc::kIo: return "IoError";
    case Errc::kUsage: return "UsageError";
    case Errc::kInternal: return "InternalError";
  }
  return "Unknown";
}

// ---- directed rounding ------------------------------------------------------

double add_down(double a, double b) {
  double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isnan(s)) domain("inf - inf");
    return (std::isinf(a) || std::isinf(b)) ? s : (s > 0 ? DBL_MAX : s);
  }
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return err < 0 ? down1(s) : s;
}

double add_up(double a, double b) {
  double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isnan(s)) domain("inf - inf");
    return (std::isinf(a) || std::isinf(b)) ? s : (s < 0 ? -DBL_MAX : s);
  }
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return err > 0 ? up1(s) : s;
}

double mul_down(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  double p = a * b;
  if (!std::isfinite(p)) return (std::isinf(a) || std::isinf(b)) ? p : (p > 0 ? DBL_MAX : p);
  if (std::fabs(p) < kTiny) return down1(p);
  double err = std::fma(a, b, -p);
  return err < 0 ? down1(p) : p;
}

double mul_up(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  double p = a * b;
  if (!std::isfinite(p)) return (std::isinf(a) || std::isinf(b)) ? p : (p < 0 ? -DBL_MAX : p);
  if (std::fabs(p) < kTiny) return up1(p);
  double err = std::fma(a, b, -p);
  return err > 0 ? up1(p) : p;
}

namespace {
// Sign of (exact a/b) - q, or 2 when unknown.
int div_residual_sign(double a, double b, double q) {
  if (std::isinf(b) || std::isinf(a) || a == 0.0) return 0;
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return 2;
  double r = std::fma(-q, b, a);
  if (r == 0.0) return 0;
  return ((r > 0) == (b > 0)) ? 1 : -1;
}
}  // namespace

double div_down(double a, double b) {
  double q = a / b;
  if (!std::isfinite(q)) return (std::isinf(a)) ? q : (q > 0 ? DBL_MAX : q);
  int s = div_residual_sign(a, b, q);
  return (s == -1 || s == 2) ? down1(q) : q;
}

double div_up(double a, double b) {
  double q = a / b;
  if (!std::isfinite(q)) return (std::isinf(a)) ? q : (q < 0 ? -DBL_MAX : q);
  int s = div_residual_sign(a, b, q);
  return (s == 1 || s == 2) ? up1(q) : q;
}

double sqrt_down(double a) {
  if (a <= 0.0) return 0.0;
  double r = std::sqrt(a);
  if (std::isinf(r)) return r;
  if (a < kTiny) return down1(r);
  double e = std::fma(-r, r, a);
  return e < 0 ? down1(r) : r;
}

double sqrt_up(double a) {
  if (a <= 0.0) return 0.0;
  double r = std::sqrt(a);
  if (std::isinf(r)) return r;
  if (a < kTiny) return up1(r);
  double e = std::fma(-r, r, a);
  return e > 0 ? up1(r) : r;
}

// ---- RealInterval -----------------------------------------------------------

RealInterval::RealInterval(double x) : lo_(x), hi_(x) {
  if (std::isnan(x)) domain("NaN endpoint");
}

RealInterval::RealInterval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) domain("invalid interval endpoints");
}

double RealInterval::mid() const {
  if (std::isinf(lo_) || std::isinf(hi_)) {
    if (std::isinf(lo_) && std::isinf(hi_)) return 0.0;
    return std::isinf(lo_) ? (hi_ > 0 ? -hi_ : 2 * hi_ - 1) : (lo_ < 0 ? -lo_ : 2 * lo_ + 1);
  }
  return 0.5 * lo_ + 0.5 * hi_;
}

double RealInterval::width() const { return add_up(hi_, -lo_); }
double RealInterval::mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }
double RealInterval::mig() const {
  if (contains_zero()) return 0.0;
  return std::min(std::fabs(lo_), std::fabs(hi_));
}

std::string RealInterval::str() const {
  char buf[80];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", lo_, hi_);
  return buf;
}

RealInterval RealInterval::pi() { return {kPi[0], kPi[1]}; }
RealInterval RealInterval::half_pi() { return {kHalfPi[0], kHalfPi[1]}; }
RealInterval RealInterval::two_pi() { return {kTwoPi[0], kTwoPi[1]}; }
RealInterval RealInterval::e() { return {kE[0], kE[1]}; }
RealInterval RealInterval::entire() { return {-kInf, kInf}; }

RealInterval hull(const RealInterval& a, const RealInterval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

RealInterval intersect(const RealInterval& a, const RealInterval& b) {
  double lo = std::max(a.lo(), b.lo());
  double hi = std::min(a.hi(), b.hi());
  if (lo > hi) domain("empty intersection");
  return {lo, hi};
}

RealInterval operator-(const RealInterval& a) { return {-a.hi(), -a.lo()}; }

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  return {add_down(a.lo(), b.lo()), add_up(a.hi(), b.hi())};
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  return {add_down(a.lo(), -b.hi()), add_up(a.hi(), -b.lo())};
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  double p[4] = {a.lo(), a.lo(), a.hi(), a.hi()};
  double q[4] = {b.lo(), b.hi(), b.lo(), b.hi()};
  double lo = kInf, hi = -kInf;
  for (int i = 0; i < 4; ++i) {
    lo = std::min(lo, mul_down(p[i], q[i]));
    hi = std::max(hi, mul_up(p[i], q[i]));
  }
  return {lo, hi};
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (b.contains_zero()) throw Error(Errc::kDivisorContainsZero, "divisor " + b.str() + " contains zero");
  double p[4] = {a.lo(), a.lo(), a.hi(), a.hi()};
  double q[4] = {b.lo(), b.hi(), b.lo(), b.hi()};
  double lo = kInf, hi = -kInf;
  for (int i = 0; i < 4; ++i) {
    lo = std::min(lo, div_down(p[i], q[i]));
    hi = std::max(hi, div_up(p[i], q[i]));
  }
  return {lo, hi};
}

RealInterval& operator+=(RealInterval& a, const RealInterval& b) { return a = a + b; }
RealInterval& operator-=(RealInterval& a, const RealInterval& b) { return a = a - b; }
RealInterval& operator*=(RealInterval& a, const RealInterval& b) { return a = a * b; }

RealInterval sqr(const RealInterval& a) {
  double m = a.mig(), M = a.mag();
  return {mul_down(m, m), mul_up(M, M)};
}

RealInterval abs(const RealInterval& a) { return {a.mig(), a.mag()}; }

RealInterval min(const RealInterval& a, const RealInterval& b) {
  return {std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

RealInterval max(const RealInterval& a, const RealInterval& b) {
  return {std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

RealInterval exp(const RealInterval& a) {
  auto lo_of = [](double x) {
    if (x == 0.0) return 1.0;
    if (x == -kInf) return 0.0;
    return std::max(0.0, down2(std::exp(x)));
  };
  auto hi_of = [](double x) {
    if (x == 0.0) return 1.0;
    double y = std::exp(x);
    return std::isinf(y) ? y : up2(y);
  };
  return {lo_of(a.lo()), hi_of(a.hi())};
}

RealInterval log(const RealInterval& a) {
  if (!(a.lo() > 0.0)) domain("log of non-positive interval");
  auto lo_of = [](double x) { return x == 1.0 ? 0.0 : down2(std::log(x)); };
  auto hi_of = [](double x) {
    if (x == 1.0) return 0.0;
    double y = std::log(x);
    return std::isinf(y) ? y : up2(y);
  };
  return {lo_of(a.lo()), hi_of(a.hi())};
}

RealInterval log1p(const RealInterval& a) {
  if (!(a.lo() > -1.0)) domain("log1p argument <= -1");
  auto lo_of = [](double x) { return x == 0.0 ? 0.0 : down2(std::log1p(x)); };
  auto hi_of = [](double x) {
    if (x == 0.0) return 0.0;
    double y = std::log1p(x);
    return std::isinf(y) ? y : up2(y);
  };
  return {lo_of(a.lo()), hi_of(a.hi())};
}

RealInterval sqrt(const RealInterval& a) {
  if (a.lo() < 0.0) domain("sqrt of negative interval");
  return {sqrt_down(a.lo()), sqrt_up(a.hi())};
}

RealInterval atan(const RealInterval& a) {
  const double cap = kHalfPi[1];
  auto lo_of = [&](double x) { return x == 0.0 ? 0.0 : std::max(-cap, down2(std::atan(x))); };
  auto hi_of = [&](double x) { return x == 0.0 ? 0.0 : std::min(cap, up2(std::atan(x))); };
  return {lo_of(a.lo()), hi_of(a.hi())};
}

namespace {

// Enclosure of cos (shift = 0) or sin (shift = 1/2): extrema lie at (m + shift) * pi.
RealInterval trig(const RealInterval& a, double shift) {
  if (!std::isfinite(a.lo()) || !std::isfinite(a.hi()) || a.hi() - a.lo() > 6.0) return {-1.0, 1.0};
  // Beyond this the multiples m + shift are no longer exact in binary64.
  if (a.mag() > 1e15) return {-1.0, 1.0};
  auto f = [&](double x) { return shift == 0.0 ? std::cos(x) : std::sin(x); };
  double lo, hi;
  if (a.is_point() && a.lo() == 0.0) {
    double v = shift == 0.0 ? 1.0 : 0.0;
    return {v, v};
  }
  double fl = f(a.lo()), fh = f(a.hi());
  lo = down2(std::min(fl, fh));
  hi = up2(std::max(fl, fh));
  double m0 = std::floor(a.lo() / kPi[0] - shift) - 2;
  double m1 = std::ceil(a.hi() / kPi[0] - shift) + 2;
  for (double m = m0; m <= m1; m += 1.0) {
    RealInterval at = RealInterval(m + shift) * RealInterval::pi();
    if (at.intersects(a)) {
      bool even = std::fmod(std::fabs(m), 2.0) == 0.0;
      if (even) hi = 1.0;
      else lo = -1.0;
    }
  }
  return {std::max(-1.0, lo), std::min(1.0, hi)};
}

RealInterval powi(const RealInterval& x, long n) {
  // n >= 1
  RealInterval base = abs(x);
  RealInterval acc(1.0);
  long k = n;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = sqr(base);
  }
  if (n % 2 == 0 || x.lo() >= 0) return acc;
  // odd power is monotone increasing
  auto point = [&](double v) {
    RealInterval r = powi(RealInterval(std::fabs(v)), n);
    return v < 0 ? -r : r;
  };
  return {point(x.lo()).lo(), point(x.hi()).hi()};
}

}  // namespace

RealInterval sin(const RealInterval& a) { return trig(a, 0.5); }
RealInterval cos(const RealInterval& a) { return trig(a, 0.0); }

RealInterval pow_real(const RealInterval& x, double p) {
  if (std::isnan(p)) domain("NaN exponent");
  if (p == 0.0) return RealInterval(1.0);
  if (p == 0.5) return sqrt(x);
  if (p == std::floor(p) && std::fabs(p) <= 4096) {
    long n = static_cast<long>(std::fabs(p));
    RealInterval r = powi(x, n);
    return p > 0 ? r : RealInterval(1.0) / r;
  }
  if (x.lo() < 0.0) domain("non-integer power of negative interval");
  if (x.lo() == 0.0) {
    if (p < 0) domain("negative power of interval containing zero");
    if (x.hi() == 0.0) return RealInterval(0.0);
    return {0.0, exp(RealInterval(p) * log(RealInterval(x.hi()))).hi()};
  }
  return exp(RealInterval(p) * log(x));
}

RealInterval pow(const RealInterval& x, const RealInterval& p) {
  if (p.is_point()) return pow_real(x, p.lo());
  if (x.lo() < 0.0) domain("interval power of negative interval");
  if (x.lo() == 0.0) {
    if (p.lo() <= 0) domain("non-positive interval power of interval containing zero");
    if (x.hi() == 0.0) return RealInterval(0.0);
    RealInterval lh = log(RealInterval(x.hi()));
    return {0.0, std::max(exp(RealInterval(p.lo()) * lh).hi(), exp(RealInterval(p.hi()) * lh).hi())};
  }
  return exp(p * log(x));
}

RealInterval hypot(const RealInterval& a, const RealInterval& b) { return sqrt(sqr(a) + sqr(b)); }

RealInterval log1p_over(const RealInterval& y) {
  if (y.lo() < 0.0) domain("log1p_over needs y >= 0");
  auto at = [](double v) -> RealInterval {
    if (v == 0.0) return RealInterval(1.0);
    if (std::isinf(v)) return RealInterval(0.0);
    return log1p(RealInterval(v)) / RealInterval(v);
  };
  double lo = std::max(0.0, at(y.hi()).lo());
  double hi = std::min(1.0, at(y.lo()).hi());
  return {lo, hi};
}

RealInterval atan_over(const RealInterval& y) {
  auto at = [](double v) -> RealInterval {
    if (v == 0.0) return RealInterval(1.0);
    if (std::isinf(v)) return RealInterval(0.0);
    return atan(RealInterval(v)) / RealInterval(v);
  };
  double m = y.mig(), M = y.mag();
  double lo = std::max(0.0, at(M).lo());
  double hi = std::min(1.0, at(m).hi());
  return {lo, hi};
}

// ---- ComplexRect ------------------------------------------------------------

std::string ComplexRect::str() const { return re.str() + " + i" + im.str(); }

ComplexRect operator-(const ComplexRect& a) { return {-a.re, -a.im}; }
ComplexRect operator+(const ComplexRect& a, const ComplexRect& b) { return {a.re + b.re, a.im + b.im}; }
ComplexRect operator-(const ComplexRect& a, const ComplexRect& b) { return {a.re - b.re, a.im - b.im}; }

ComplexRect operator*(const ComplexRect& a, const ComplexRect& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexRect operator*(const RealInterval& a, const ComplexRect& b) { return {a * b.re, a * b.im}; }

ComplexRect operator/(const ComplexRect& a, const ComplexRect& b) {
  if (b.contains_zero()) throw Error(Errc::kDivisorContainsZero, "complex divisor " + b.str() + " contains zero");
  if (b.im.is_point() && b.im.lo() == 0.0) return a / b.re;
  RealInterval den = cx_norm(b);
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

ComplexRect operator/(const ComplexRect& a, const RealInterval& b) { return {a.re / b, a.im / b}; }

ComplexRect conj(const ComplexRect& z) { return {z.re, -z.im}; }

ComplexRect cx_sqr(const ComplexRect& z) {
  return {sqr(z.re) - sqr(z.im), RealInterval(2.0) * z.re * z.im};
}

RealInterval cx_norm(const ComplexRect& z) { return sqr(z.re) + sqr(z.im); }

RealInterval cx_abs(const ComplexRect& z) {
  double nx = z.re.mig(), ny = z.im.mig();
  double fx = z.re.mag(), fy = z.im.mag();
  double lo = sqrt_down(add_down(mul_down(nx, nx), mul_down(ny, ny)));
  // Nearest point is the origin only when the rectangle contains it.
  if (!z.contains_zero()) {
    lo = std::max({lo, nx, ny, std::numeric_limits<double>::denorm_min()});
  }
  double hi = sqrt_up(add_up(mul_up(fx, fx), mul_up(fy, fy)));
  hi = std::max(hi, std::max(fx, fy));
  return {lo, hi};
}

ComplexRect cx_exp(const ComplexRect& z) {
  RealInterval m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

RealInterval cx_arg(const ComplexRect& z) {
  if (z.re.lo() <= 0.0 && z.im.contains_zero())
    throw Error(Errc::kBranchCutViolation, "rectangle " + z.str() + " meets the branch cut (-inf, 0]");
  if (z.re.lo() > 0.0) return atan(z.im / z.re);
  RealInterval h = RealInterval::half_pi();
  if (z.im.lo() > 0.0) return h - atan(z.re / z.im);
  return -h - atan(z.re / z.im);
}

ComplexRect cx_log(const ComplexRect& z) {
  RealInterval arg = cx_arg(z);
  RealInterval r = cx_abs(z);
  return {log(r), arg};
}

ComplexRect cx_pow_real(const ComplexRect& z, const RealInterval& p) { return cx_exp(p * cx_log(z)); }

ComplexRect inflate(const ComplexRect& z, double r) {
  return {{add_down(z.re.lo(), -r), add_up(z.re.hi(), r)}, {add_down(z.im.lo(), -r), add_up(z.im.hi(), r)}};
}

}  // namespace plc
