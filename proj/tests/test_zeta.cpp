// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "oracle_values.hpp"
#include "plcert/zeta.hpp"

using plc::ComplexRect;
using plc::RealInterval;

TEST_CASE("zeta encloses the mpmath references") {
  for (const auto& z : oracle::kZeta) {
    CAPTURE(z.sigma);
    CAPTURE(z.t);
    ComplexRect v = plc::zeta_em(ComplexRect(z.sigma, z.t), 1e-12);
    CHECK(v.re.contains(z.re));
    CHECK(v.im.contains(z.im));
    CHECK(v.re.width() < 1e-10);
    CHECK(v.im.width() < 1e-10);
  }
}

TEST_CASE("f_zeta encloses the mpmath references, including s = 1") {
  for (const auto& z : oracle::kFZeta) {
    CAPTURE(z.sigma);
    CAPTURE(z.t);
    ComplexRect v = plc::f_zeta(ComplexRect(z.sigma, z.t), 1e-12);
    CHECK(v.re.contains(z.re));
    CHECK(v.im.contains(z.im));
    CHECK(v.re.width() < 1e-9);
  }
}

TEST_CASE("zeta(2) = pi^2/6 to 1e-12") {
  ComplexRect v = plc::zeta_em(ComplexRect(2.0, 0.0), 1e-14);
  RealInterval pi2 = RealInterval::pi() * RealInterval::pi() / RealInterval(6.0);
  CHECK(v.re.intersects(pi2));
  CHECK(v.re.width() < 1e-12);
}

TEST_CASE("the first zero is resolved") {
  ComplexRect v = plc::zeta_em(ComplexRect(0.5, 14.134725), 1e-12);
  RealInterval m = plc::cx_abs(v);
  CHECK(m.hi() < 1e-4);
  CHECK(m.contains(oracle::kAbsZetaNearZero));
  ComplexRect z = plc::zeta_em(ComplexRect(0.5, oracle::kFirstZeroT), 1e-12);
  CHECK(z.contains_zero());
}

TEST_CASE("rectangle enclosures contain interior points") {
  ComplexRect box(RealInterval(0.75, 0.8), RealInterval(99.9, 100.1));
  ComplexRect v = plc::zeta_em(box, 1e-8);
  CHECK(v.re.contains(oracle::kZeta[6].re));
  CHECK(v.im.contains(oracle::kZeta[6].im));
}

TEST_CASE("remainder bound shrinks with more terms") {
  ComplexRect s(0.5, 30.0);
  double r1 = plc::em_remainder_bound(s, {16, 8});
  double r2 = plc::em_remainder_bound(s, {32, 10});
  CHECK(r2 < r1);
  plc::ParamChoice pc = plc::auto_params(s, 1e-12);
  CHECK(pc.reachable);
  CHECK(pc.remainder <= 1e-12);
}

TEST_CASE("zeta refuses the pole and the left half plane") {
  CHECK_THROWS_AS(plc::zeta_em(ComplexRect(RealInterval(0.9, 1.1), RealInterval(-0.1, 0.1)), 1e-8), plc::Error);
  CHECK_THROWS_AS(plc::zeta_em(ComplexRect(-0.5, 3.0), 1e-8), plc::Error);
  ComplexRect f = plc::f_zeta(ComplexRect(RealInterval(0.99, 1.01), RealInterval(-0.01, 0.01)), 1e-8);
  CHECK(f.contains(1.0, 0.0));
}

TEST_CASE("pole lemma near s = 1") {
  const plc::PoleLemma& p = plc::pole_lemma();
  CHECK(p.holds);
  CHECK(p.delta == 0.0625);
  CHECK(p.re_q < 1.0);
  CHECK(p.m0 < 1.0);
  // Reference: (s-1) zeta(s) = 1 + gamma (s-1) + ..., so q(0) = Euler's gamma.
  CHECK(p.m0 >= 0.5772156649);
  CHECK(plc::pole_lemma_covers(ComplexRect(RealInterval(1.0, 1.05), RealInterval(-0.05, 0.05))));
  CHECK(!plc::pole_lemma_covers(ComplexRect(RealInterval(0.9, 1.05), RealInterval(-0.05, 0.05))));
}

TEST_CASE("parameter pairs agree") {
  for (const auto& z : oracle::kZeta) {
    if (z.sigma < 0.3) continue;
    ComplexRect s(z.sigma, z.t);
    plc::ParamChoice pc = plc::auto_params(s, 1e-10);
    plc::EMParams p2{2 * pc.params.N, pc.params.K + 2};
    ComplexRect a = plc::zeta_em(s, pc.params), b = plc::zeta_em(s, p2);
    CHECK(a.re.intersects(b.re));
    CHECK(a.im.intersects(b.im));
  }
}
