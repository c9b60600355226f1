// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "plcert/interval.hpp"

using plc::ComplexRect;
using plc::RealInterval;

TEST_CASE("directed rounding brackets the exact result") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 20000; ++i) {
    double a = u(rng), b = u(rng);
    long double s = static_cast<long double>(a) + b;
    CHECK(plc::add_down(a, b) <= s);
    CHECK(plc::add_up(a, b) >= s);
    double p = a * b, r = std::fma(a, b, -p);
    if (r > 0) CHECK(plc::mul_up(a, b) > p);
    if (r < 0) CHECK(plc::mul_down(a, b) < p);
    CHECK(plc::mul_down(a, b) <= plc::mul_up(a, b));
  }
}

TEST_CASE("division and sqrt are outward rounded") {
  CHECK(plc::div_down(1.0, 3.0) < plc::div_up(1.0, 3.0));
  CHECK(plc::div_down(1.0, 4.0) == 0.25);
  CHECK(plc::div_up(1.0, 4.0) == 0.25);
  CHECK(plc::sqrt_down(2.0) < plc::sqrt_up(2.0));
  CHECK(plc::sqrt_down(4.0) == 2.0);
}

TEST_CASE("elementary functions contain libm values") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.01, 50.0);
  for (int i = 0; i < 5000; ++i) {
    double x = u(rng);
    RealInterval X(x);
    CHECK(plc::exp(RealInterval(x / 10)).contains(std::exp(x / 10)));
    CHECK(plc::log(X).contains(std::log(x)));
    CHECK(plc::sqrt(X).contains(std::sqrt(x)));
    CHECK(plc::atan(X).contains(std::atan(x)));
    CHECK(plc::sin(X).contains(std::sin(x)));
    CHECK(plc::cos(X).contains(std::cos(x)));
  }
}

TEST_CASE("interval constants") {
  CHECK(RealInterval::pi().contains(3.14159265358979323846));
  CHECK(RealInterval::pi().width() < 1e-15);
  CHECK(RealInterval::e().contains(2.71828182845904523536));
  CHECK(RealInterval::half_pi().contains(1.57079632679489661923));
}

TEST_CASE("sin and cos of wide intervals reach the extrema") {
  RealInterval s = plc::sin(RealInterval(1.0, 2.0));
  CHECK(s.hi() >= 1.0);
  RealInterval c = plc::cos(RealInterval(3.0, 3.3));
  CHECK(c.lo() <= -1.0);
}

TEST_CASE("division by an interval containing zero throws") {
  CHECK_THROWS_AS(RealInterval(1.0) / RealInterval(-1.0, 1.0), plc::Error);
  try {
    (void)(RealInterval(1.0) / RealInterval(0.0, 1.0));
  } catch (const plc::Error& e) {
    CHECK(e.code() == plc::Errc::kDivisorContainsZero);
  }
}

TEST_CASE("log domain") {
  CHECK_THROWS_AS(plc::log(RealInterval(-1.0, 2.0)), plc::Error);
  CHECK(plc::log(RealInterval(1.0)).contains(0.0));
}

TEST_CASE("log1p_over and atan_over are continuous at zero") {
  CHECK(plc::log1p_over(RealInterval(0.0)).contains(1.0));
  CHECK(plc::atan_over(RealInterval(0.0)).contains(1.0));
  RealInterval y(0.0, 1e-3);
  RealInterval l = plc::log1p_over(y);
  CHECK(l.contains(std::log1p(1e-3) / 1e-3));
  CHECK(l.contains(1.0));
  RealInterval a = plc::atan_over(RealInterval(-0.5, 0.5));
  CHECK(a.contains(std::atan(0.5) / 0.5));
}

TEST_CASE("cx_log refuses the branch cut") {
  CHECK_THROWS_AS(plc::cx_log(ComplexRect(RealInterval(-2.0, -1.0), RealInterval(-0.1, 0.1))), plc::Error);
  try {
    plc::cx_log(ComplexRect(RealInterval(-2.0, -1.0), RealInterval(0.0)));
  } catch (const plc::Error& e) {
    CHECK(e.code() == plc::Errc::kBranchCutViolation);
  }
  ComplexRect l = plc::cx_log(ComplexRect(RealInterval(-2.0, -1.0), RealInterval(0.5, 1.0)));
  CHECK(l.im.contains(std::atan2(0.5, -2.0)));
  CHECK(l.im.contains(std::atan2(1.0, -1.0)));
}

TEST_CASE("cx_abs on rectangles straddling the axes") {
  RealInterval a = plc::cx_abs(ComplexRect(RealInterval(-1.0, 2.0), RealInterval(-3.0, 1.0)));
  CHECK(a.lo() == 0.0);
  CHECK(a.contains(std::hypot(2.0, 3.0)));
  RealInterval b = plc::cx_abs(ComplexRect(RealInterval(-1.0, 2.0), RealInterval(1.0, 2.0)));
  CHECK(b.lo() <= 1.0);
  CHECK(b.lo() > 0.99);
  CHECK(b.contains(std::hypot(2.0, 2.0)));
  RealInterval c = plc::cx_abs(ComplexRect(RealInterval(3.0, 4.0), RealInterval(-1.0, 1.0)));
  CHECK(c.lo() <= 3.0);
  CHECK(c.lo() > 2.99);
}

TEST_CASE("complex arithmetic contains the point result") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 2000; ++i) {
    std::complex<double> x(u(rng), u(rng)), y(u(rng), u(rng));
    ComplexRect X(x.real(), x.imag()), Y(y.real(), y.imag());
    auto p = x * y;
    CHECK((X * Y).contains(p.real(), p.imag()));
    if (std::abs(y) > 1e-3) {
      // std::complex division is not correctly rounded; compare in long double.
      long double xr = x.real(), xi = x.imag(), yr = y.real(), yi = y.imag();
      long double d = yr * yr + yi * yi;
      long double qr = (xr * yr + xi * yi) / d, qi = (xi * yr - xr * yi) / d;
      ComplexRect Q = X / Y;
      CHECK((Q.re.lo() <= qr && qr <= Q.re.hi()));
      CHECK((Q.im.lo() <= qi && qi <= Q.im.hi()));
    }
    double h = std::abs(x);
    RealInterval m = plc::cx_abs(X);
    CHECK(m.lo() <= h * (1 + 1e-15));
    CHECK(m.hi() >= h * (1 - 1e-15));
  }
}

TEST_CASE("trig of huge arguments") {
  for (double x : {1e15, 3e17, -9e18, 1e300}) {
    RealInterval s = plc::sin(RealInterval(x)), c = plc::cos(RealInterval(x));
    CHECK(s.contains(std::sin(x)));
    CHECK(c.contains(std::cos(x)));
  }
  RealInterval m = plc::sin(RealInterval(1e14, 1e14 + 1));
  CHECK(m.lo() >= -1.0);
  CHECK(m.hi() <= 1.0);
}
