// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "plcert/real.hpp"

using plc::Rational;
using plc::Real;

TEST_CASE("rationals reduce and keep the denominator positive") {
  auto q = Rational::make(10, -14);
  REQUIRE(q);
  CHECK(q->num() == -5);
  CHECK(q->den() == 7);
  CHECK(!Rational::make(1, 0));
  auto s = plc::add(*Rational::make(1, 2), *Rational::make(1, 3));
  REQUIRE(s);
  CHECK(s->str() == "5/6");
  CHECK(plc::compare(*Rational::make(1, 3), *Rational::make(1, 2)) < 0);
}

TEST_CASE("rational overflow is reported, not wrapped") {
  Rational big = *Rational::make(INT64_MAX, 1);
  CHECK(!plc::mul(big, big));
}

TEST_CASE("5/7 parses to an exact rational with a tight enclosure") {
  Real r = Real::parse("5/7");
  REQUIRE(r.rational());
  CHECK(r.rational()->num() == 5);
  CHECK(r.rational()->den() == 7);
  CHECK(r.value().lo() < r.value().hi());
  CHECK(r.value().lo() * 7 <= 5.0);
  CHECK(r.value().hi() * 7 >= 5.0);
  CHECK(r.value().width() < 1e-15);
}

TEST_CASE("decimals are exact") {
  Real r = Real::parse("1.93");
  REQUIRE(r.rational());
  CHECK(r.rational()->num() == 193);
  CHECK(r.rational()->den() == 100);
  CHECK(r.value().contains(1.93));
  Real s = Real::parse("1+2.4e-8");
  REQUIRE(s.rational());
  CHECK(s.rational()->den() == 125000000);
  CHECK(s.rational()->num() == 125000003);
  Real t = Real::parse("1e-10");
  REQUIRE(t.rational());
  CHECK(t.rational()->den() == 10000000000);
}

TEST_CASE("forms linear in e stay exact") {
  Real r = Real::parse("e+2");
  REQUIRE(r.exact());
  CHECK(r.exact()->r == Rational(2));
  CHECK(r.exact()->k == Rational(1));
  CHECK(r.value().contains(std::exp(1.0) + 2));
  Real q = Real::parse("4*e");
  REQUIRE(q.exact());
  CHECK(q.exact()->k == Rational(4));
  CHECK(!q.rational());
  Real d = Real::parse("e+2") - Real::parse("e");
  REQUIRE(d.rational());
  CHECK(d.rational()->num() == 2);
}

TEST_CASE("log and pi") {
  Real z = Real::parse("log(1)");
  CHECK(z.value().contains(0.0));
  CHECK(z.value().width() <= 1e-300);
  Real l = Real::parse("log(1.546)");
  CHECK(l.value().contains(std::log(1.546)));
  CHECK(!l.exact());
  CHECK(Real::parse("pi").value().contains(3.141592653589793));
  CHECK(Real::parse("2*pi/3").value().contains(2.0943951023931953));
}

TEST_CASE("interval literals") {
  Real r = Real::parse("[1.5, 2]");
  CHECK(r.value().lo() <= 1.5);
  CHECK(r.value().hi() >= 2.0);
  CHECK(!r.exact());
}

TEST_CASE("malformed literals throw ParseError") {
  for (const char* bad : {"", "1+", "log(", "foo", "1/0", "[2,1]", "e^"}) {
    CAPTURE(bad);
    try {
      (void)Real::parse(bad);
      FAIL("accepted");
    } catch (const plc::Error& e) {
      CHECK(e.code() == plc::Errc::kParseError);
    }
  }
}

TEST_CASE("canonical text round trips") {
  for (const char* text : {"5/7", "e+2", "-1/2", "27/164", "4*e+2"}) {
    CAPTURE(text);
    Real r = Real::parse(text);
    Real back = Real::parse(r.canonical());
    CHECK(back.same_value(r));
  }
}
