// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "oracle_values.hpp"
#include "plcert/verifier.hpp"

using namespace plc;

namespace {

GExpr g1() { return build_catalog("Ex1.G1", {}, {Real(1), Real(2)}).expr; }

RegionCheck f_zeta_check(double t_hi, double bound, Mode mode) {
  RegionCheck rc;
  rc.target = f_zeta_target(1e-10);
  rc.region = Box{RealInterval(1.0, 2.0), RealInterval(0.0, t_hi)};
  rc.bound = RealInterval(bound);
  rc.mode = mode;
  rc.budget = 200000;
  return rc;
}

}  // namespace

TEST_CASE("|f_zeta| <= 1 on the boundary of [1,2] x [0,3]") {
  Fact f = verify_sup(f_zeta_check(3.0, 1.0, Mode::kBoundaryOnly));
  CHECK(f.kind == FactKind::kVerified);
  CHECK(f.boxes > 0);
}

TEST_CASE("|f_zeta| <= 2.1 on [1,2] x [0,30]") {
  Fact f = verify_sup(f_zeta_check(30.0, 2.1, Mode::kBoundaryOnly));
  CHECK(f.kind == FactKind::kVerified);
  CHECK(f.margin > 0.0);
  CHECK(f.margin <= 2.1 - oracle::kFZetaMaxLine1 + 1e-9);
}

TEST_CASE("|f_zeta| <= 0.99 is refuted with a counter box") {
  Fact f = verify_sup(f_zeta_check(3.0, 0.99, Mode::kBoundaryOnly));
  CHECK(f.kind == FactKind::kCounterBox);
  REQUIRE(f.counter);
  CHECK(f.counter_value.lo() > 0.99);
  RealInterval again = f_zeta_target(1e-12).abs(*f.counter);
  CHECK(again.lo() > 0.99);
}

TEST_CASE("inf |zeta| on a zero-free box") {
  RegionCheck rc;
  rc.target = zeta_target(1e-10);
  rc.region = Box{RealInterval(1.5, 2.0), RealInterval(0.0, 10.0)};
  rc.bound = RealInterval(0.3);
  Fact f = verify_inf(rc);
  CHECK(f.kind == FactKind::kVerified);
  rc.region = Box{RealInterval(0.4, 0.6), RealInterval(13.0, 15.0)};
  rc.bound = RealInterval(1e-3);
  Fact z = verify_inf(rc);
  CHECK(z.kind == FactKind::kCounterBox);
}

TEST_CASE("monotonicity in sigma") {
  MonotoneOptions mo;
  mo.T0 = 3.0;
  Fact f = verify_monotone_sigma(g1(), Real(1), Real(2), Direction::kIncreasing, mo);
  CHECK(f.kind == FactKind::kVerified);
  CHECK_THROWS_AS(verify_monotone_sigma(g1(), Real(1), Real(2), Direction::kDecreasing, mo), Error);
  MonotoneOptions capped = mo;
  capped.T_max = 50.0;
  Fact wrong = verify_monotone_sigma(g1(), Real(1), Real(2), Direction::kDecreasing, capped);
  CHECK(wrong.kind == FactKind::kCounterBox);

  GExpr g2 = build_catalog("Ex1.G2", {}, {Real(1), Real(2)}).expr;
  Fact at3 = verify_monotone_sigma(g2, Real(1), Real(2), Direction::kIncreasing, mo);
  CHECK(at3.kind == FactKind::kCounterBox);
  mo.T0 = 4.0;
  Fact at4 = verify_monotone_sigma(g2, Real(1), Real(2), Direction::kIncreasing, mo);
  CHECK(at4.kind == FactKind::kVerified);
}

TEST_CASE("nonvanishing") {
  Fact f = verify_nonvanishing(g1(), Real(1), Real(2), 100.0, std::nullopt);
  CHECK(f.kind == FactKind::kVerified);
}

TEST_CASE("classical comparison on the line") {
  GExpr g = g1();
  auto sh = classify(g);
  REQUIRE(sh);
  Fact f = verify_classical_le(g, *sh, Real(1), 3.0, 100.0);
  CHECK(f.kind == FactKind::kVerified);
}

TEST_CASE("pole factor") {
  CHECK(verify_pole_factor_le_one(Real(1)).kind == FactKind::kVerified);
  CHECK(verify_pole_factor_le_one(Real::parse("5/7")).kind == FactKind::kVerified);
  CHECK(verify_pole_factor_le_one(Real::parse("1/4")).kind == FactKind::kCounterBox);
}

TEST_CASE("exponent interpolation") {
  RealInterval e = exponent_at(RealInterval(1.0), RealInterval(0.0), Real(1), Real(2), RealInterval(1.25));
  CHECK(e.contains(0.75));
  CHECK(e.width() < 1e-15);
}

TEST_CASE("best-first maximization") {
  AbsFn f = [](const Box& b) { return RealInterval(1.0) - sqr(b.sigma - RealInterval(0.3)) - sqr(b.t - RealInterval(0.6)); };
  SupResult r = bound_sup(f, f, Box{RealInterval(0.0, 1.0), RealInterval(0.0, 1.0)}, 1e-8, 100000);
  CHECK(r.converged);
  CHECK(r.upper >= 1.0);
  CHECK(r.upper - r.lower < 1e-7);
  CHECK(std::abs(r.argmax.sigma.mid() - 0.3) < 1e-3);
  CHECK(std::abs(r.argmax.t.mid() - 0.6) < 1e-3);
}

TEST_CASE("fact ids are stable and content addressed") {
  Fact a = verify_pole_factor_le_one(Real(1));
  Fact b = verify_pole_factor_le_one(Real(1));
  Fact c = verify_pole_factor_le_one(Real(2));
  CHECK(a.id() == b.id());
  CHECK(a.id() != c.id());
}

TEST_CASE("tail variables") {
  TailVars tv = TailVars::at(100.0);
  CHECK(tv.u.contains(0.0));
  CHECK(tv.u.contains(0.01));
  CHECK(tv.v.contains(1.0 / std::log(100.0)));
  CHECK(tv.lambda.contains(1.0 / std::log(std::log(100.0))));
}
