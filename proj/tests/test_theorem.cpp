// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <string>

#include "doctest.h"
#include "oracle_values.hpp"
#include "plcert/jobspec.hpp"
#include "plcert/theorem.hpp"

using namespace plc;

namespace {

StripHypotheses example2() { return to_hypotheses(example_job(2)); }

const Certificate& example2_certificate() {
  static const Certificate c = certify_strip(example2());
  return c;
}

// One member of the family on [1, eta]: G with exponents 1, 0 and the e factor
// carrying log zeta(eta).
StripHypotheses family_member(const std::string& g, const char* eta, const char* zeta_upper, double T0) {
  StripHypotheses h;
  h.label = g;
  h.a = Real(1);
  h.b = Real::parse(eta);
  Factor gf;
  gf.name = g;
  gf.g = build_catalog("Ex1." + g, {}, {Real(1), Real(2)}).expr;
  gf.alpha = Real(1);
  gf.beta = Real(0);
  gf.display = "log t";
  Factor ef;
  ef.name = "E";
  ef.g = GExpr::constant(Real::euler());
  ef.alpha = Real(0);
  ef.beta = Real::parse(std::string("log(") + zeta_upper + ")");
  h.factors = {gf, ef};
  h.T0 = T0;
  h.at_a.attested = "literature bound on the 1-line";
  h.at_a.pole_factor = true;
  h.at_a.comparisons.push_back({0, T0});
  h.at_b.attested = "|zeta(eta+it)| <= zeta(eta)";
  h.at_b.pole_factor = true;
  return h;
}

RatioSpec family_ratio(const std::string& g) {
  RatioSpec rs;
  rs.label = g;
  rs.a = Real(1);
  rs.b = Real(2);
  RatioPart pole;
  pole.kind = RatioPart::Kind::kPole;
  RatioPart sym;
  sym.kind = RatioPart::Kind::kSymLog;
  sym.shape = *classify(build_catalog("Ex1." + g, {}, {Real(1), Real(2)}).expr);
  rs.parts = {pole, sym};
  return rs;
}

bool brackets(const RealInterval& v, double x) { return v.lo() <= x + 4e-16 && x - 4e-16 <= v.hi(); }

}  // namespace

TEST_CASE("the example 2 package is certified") {
  const Certificate& c = example2_certificate();
  CHECK(c.status == Status::kCertified);
  CHECK(!c.facts.empty());
  for (const auto& f : c.facts) CHECK(f.ok());
  CHECK(c.conclusion.find("sigma") != std::string::npos);
}

TEST_CASE("a G4 family member with T0 = 30 is certified") {
  Certificate c = certify_strip(family_member("G4", "1.4", "3.10554727798", 30.0));
  CHECK(c.status == Status::kCertified);
}

TEST_CASE("swapped exponents are refuted") {
  StripHypotheses h = family_member("G1", "1.4", "3.10554727798", 3.0);
  std::swap(h.factors[0].alpha, h.factors[0].beta);
  h.at_a.comparisons.clear();
  h.at_b.comparisons.push_back({0, 3.0});
  h.budget = 20000;
  // Without a tail lemma for the flipped direction the result is inconclusive.
  CHECK(certify_strip(h).status == Status::kInconclusive);
  h.T_max = 50.0;
  Certificate c = certify_strip(h);
  CHECK(c.status == Status::kRefuted);
  bool counter = false;
  for (const auto& f : c.facts) counter = counter || (f.check == "monotone" && f.kind == FactKind::kCounterBox);
  CHECK(counter);
}

TEST_CASE("bound_at at the endpoints and the midpoint") {
  const Certificate& c = example2_certificate();
  const double a = 5.0 / 7.0;
  for (double t : {5.0, 40.0, 1000.0}) {
    CAPTURE(t);
    GExpr g = c.hyp.factors[2].g;
    double ga = abs_eval(g, ComplexRect(RealInterval(a), RealInterval(t))).mid();
    double at_a = 1.546 * std::pow(std::hypot(a, t), 1.0 / 14) * ga;
    RealInterval ba = bound_at(c, Real::parse("5/7").value(), RealInterval(t));
    CHECK(std::abs(ba.mid() - at_a) < 1e-9 * at_a);
    double g1 = abs_eval(g, ComplexRect(1.0, t)).mid();
    RealInterval bb = bound_at(c, RealInterval(1.0), RealInterval(t));
    CHECK(std::abs(bb.mid() - g1) < 1e-9 * g1);
    double m = (a + 1) / 2;
    double gm = abs_eval(g, ComplexRect(m, t)).mid();
    double at_m = std::sqrt(1.546) * std::pow(std::hypot(m, t), 1.0 / 28) * gm;
    RealInterval bm = bound_at(c, RealInterval(m), RealInterval(t));
    CHECK(std::abs(bm.mid() - at_m) < 1e-9 * at_m);
  }
}

TEST_CASE("bound_at needs a usable certificate") {
  Certificate c = example2_certificate();
  c.status = Status::kRefuted;
  CHECK_THROWS_AS(bound_at(c, RealInterval(0.8), RealInterval(10.0)), Error);
}

TEST_CASE("ratio constants bracket the mpmath sup") {
  for (const auto& r : oracle::kRatioSup) {
    std::string name = r.name;
    if (name.rfind("Ex", 0) == 0) continue;
    CAPTURE(name);
    CAPTURE(r.t0);
    ConstantResult k = ratio_sup(family_ratio(name), r.t0, 400000);
    CHECK(k.converged);
    CHECK(k.ge_one);
    CHECK(brackets(k.value, 1.0 + r.excess));
    CHECK(k.value.hi() - 1.0 < r.excess * 1.01 + 1e-13);
  }
}

TEST_CASE("example 2 and 3 constants") {
  JobSpec j2 = example_job(2);
  ConstantResult k2 = ratio_sup(to_ratio(j2, to_hypotheses(j2)), 1e5, 400000);
  CHECK(k2.converged);
  CHECK(brackets(k2.value, 1.0 + oracle::kRatioSup[30].excess));
  JobSpec j3 = example_job(3);
  ConstantResult k3 = ratio_sup(to_ratio(j3, to_hypotheses(j3)), 1e5, 400000);
  CHECK(k3.converged);
  CHECK(brackets(k3.value, 1.0 + oracle::kRatioSup[31].excess));
}

TEST_CASE("exponent of t for example 3") {
  auto e = exponent_affine(Real::parse("27/164"), Real::parse("1/14"), Real::parse("1/2"), Real::parse("5/7"));
  REQUIRE(e);
  CHECK(e->first == *Rational::make(47, 123));
  CHECK(e->second == *Rational::make(-107, 246));
  CHECK(exponent_text(Real(2), Real(1), Real(1), Real(2)) == "3 - sigma");
}

TEST_CASE("C3 at or above pi/(b-a) is a schema error") {
  StripHypotheses h = example2();
  h.growth.C3 = Real::parse("10.99");
  CHECK_NOTHROW(validate_hypotheses(h));
  h.growth.C3 = Real(11);
  try {
    validate_hypotheses(h);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kSchemaError);
  }
}

TEST_CASE("negative exponents need the upper growth attestation") {
  StripHypotheses h = example2();
  h.factors[1].beta = Real(-1);
  try {
    normalize_exponents(h);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kMissingGrowthAttestation);
  }
  h.factors[1].upper_growth = "|s| <= 2t for t >= 1";
  StripHypotheses n = normalize_exponents(h);
  CHECK(n.normalized);
  CHECK(n.factors[1].beta.same_value(Real(0)));
  CHECK(n.factors[1].alpha.value().contains(1.0 / 14 + 1));
}

TEST_CASE("certificates are deterministic") {
  Certificate a = certify_strip(example2());
  Certificate b = certify_strip(example2());
  REQUIRE(a.facts.size() == b.facts.size());
  for (std::size_t i = 0; i < a.facts.size(); ++i) CHECK(a.facts[i].id() == b.facts[i].id());
  CHECK(a.conclusion == b.conclusion);
}
