// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcert/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>

#include "plcert/tail.hpp"
#include "plcert/zeta.hpp"

#ifndef PLCERT_VERSION
#define PLCERT_VERSION "0.0.0"
#endif

namespace plc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void schema(bool ok, const std::string& msg, const std::string& path) {
  if (!ok) throw Error(Errc::kSchemaError, msg, path);
}

Real original_alpha(const Factor& f) { return f.alpha - f.shift; }
Real original_beta(const Factor& f) { return f.beta - f.shift; }

int compare_exponents(const Real& x, const Real& y, bool* decided) {
  *decided = true;
  if (x.same_value(y)) return 0;
  if (x.value().hi() < y.value().lo()) return -1;
  if (x.value().lo() > y.value().hi()) return 1;
  *decided = false;
  return 0;
}

std::mutex cache_mu;
std::map<std::string, Fact>& fact_cache() {
  static std::map<std::string, Fact> cache;
  return cache;
}

template <class F>
Fact cached(const std::string& key, F&& run) {
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = fact_cache().find(key);
    if (it != fact_cache().end()) return it->second;
  }
  Fact f = run();
  if (f.kind != FactKind::kBudgetExhausted) {
    std::lock_guard<std::mutex> lock(cache_mu);
    fact_cache().emplace(key, f);
  }
  return f;
}

Status fold_status(const std::vector<Fact>& facts) {
  bool refuted = false, inconclusive = false, conditional = false;
  for (const auto& f : facts) {
    switch (f.kind) {
      case FactKind::kCounterBox: refuted = true; break;
      case FactKind::kBudgetExhausted: inconclusive = true; break;
      case FactKind::kConditional: conditional = true; break;
      case FactKind::kVerified: break;
    }
  }
  if (refuted) return Status::kRefuted;
  if (inconclusive) return Status::kInconclusive;
  if (conditional) return Status::kConditional;
  return Status::kCertified;
}

std::string rational_text(const Rational& q) { return q.str(); }

std::vector<PowerFactor> power_factors(const StripHypotheses& h, bool original) {
  std::vector<PowerFactor> out;
  for (const auto& f : h.factors) {
    Real al = original ? original_alpha(f) : f.alpha;
    Real be = original ? original_beta(f) : f.beta;
    out.push_back({f.name, f.g, al.value(), be.value()});
  }
  return out;
}

// Weight of the a-side (which = 0) or b-side (which = 1) exponent.
std::string weight_text(const Real& a, const Real& b, int which) {
  return which == 0 ? exponent_text(Real(1), Real(0), a, b) : exponent_text(Real(0), Real(1), a, b);
}

bool is_e_constant(const GExpr& g) {
  if (g.op() != Op::kConst) return false;
  const auto& x = g.value().exact();
  return x && x->r.is_zero() && x->k == Rational(1);
}

std::string power_text(const std::string& base, const std::string& e) {
  if (e == "0") return {};
  if (e == "1") return base;
  return base + "^(" + e + ")";
}

// The constant factor e with exponents log(A), log(B) renders as A^w_a B^w_b.
std::string e_factor_text(const Factor& f, const Real& a, const Real& b) {
  std::string out;
  const Real* ex[2] = {&f.alpha, &f.beta};
  for (int k = 0; k < 2; ++k) {
    Real x = *ex[k] - f.shift;
    if (x.same_value(Real(0))) continue;
    std::string t = ex[k]->text();
    std::string base;
    if (f.shift.same_value(Real(0)) && t.rfind("log(", 0) == 0 && t.back() == ')') base = t.substr(4, t.size() - 5);
    std::string w = weight_text(a, b, k);
    std::string term = base.empty() ? "e^((" + x.text() + ")*(" + w + "))" : power_text(base, w);
    if (term.empty()) continue;
    out += (out.empty() ? "" : " * ") + term;
  }
  return out;
}

std::string factor_text(const Factor& f, const Real& a, const Real& b, bool classical) {
  if (is_e_constant(f.g)) return e_factor_text(f, a, b);
  std::string e = exponent_text(original_alpha(f), original_beta(f), a, b);
  std::string base = classical && !f.display.empty() ? f.display : "|" + f.name + "(sigma+it)|";
  std::string term = power_text(base, e);
  if (term.empty() || e == "1") return term;
  return (classical && !f.display.empty() ? "(" + base + ")" : base) + "^(" + e + ")";
}

std::string conclusion_text(const StripHypotheses& h) {
  std::string s = "|" + h.f + "(sigma+it)| <= ";
  std::string prod;
  for (const auto& f : h.factors) {
    std::string term = factor_text(f, h.a, h.b, false);
    if (!term.empty()) prod += (prod.empty() ? "" : " * ") + term;
  }
  s += prod.empty() ? "1" : prod;
  s += " for sigma in [" + h.a.text() + ", " + h.b.text() + "]";
  return s;
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::kCertified: return "certified";
    case Status::kConditional: return "conditional";
    case Status::kRefuted: return "refuted";
    case Status::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string toolchain_fingerprint() {
  std::string s = std::string("plcert ") + PLCERT_VERSION + "; ";
#ifdef __VERSION__
  s += std::string("cc ") + __VERSION__;
#endif
  s += "; binary64 outward rounding";
  return s;
}

Target make_target(const std::string& f) {
  if (f == "f_zeta") return f_zeta_target(1e-10);
  if (f == "zeta") return zeta_target(1e-10);
  throw Error(Errc::kSchemaError, "unknown target '" + f + "'", "/f");
}

void validate_hypotheses(const StripHypotheses& h) {
  schema(h.a.value().hi() < h.b.value().lo(), "a < b required", "/a");
  schema(h.f == "f_zeta" || h.f == "zeta", "f must be f_zeta or zeta", "/f");
  schema(h.T0 >= 0, "T0 must be non-negative", "/T0");
  schema(h.T_cap > 3, "T_cap must exceed 3", "/T_cap");
  RealInterval width = h.b.value() - h.a.value();
  RealInterval limit = RealInterval::pi() / width;
  schema(h.growth.C1.value().lo() > 0 && h.growth.C2.value().lo() > 0, "growth constants C1, C2 must be positive",
         "/growth");
  schema(h.growth.C3.value().lo() > 0, "growth constant C3 must be positive", "/growth/C3");
  schema(h.growth.C3.value().hi() < limit.lo(),
         "growth condition needs 0 < C3 < pi/(b-a) (= " + fmt(limit.lo()) + "), got C3 = " + h.growth.C3.text(),
         "/growth/C3");
  for (std::size_t i = 0; i < h.factors.size(); ++i) {
    schema(static_cast<bool>(h.factors[i].g), "factor without expression", "/factors/" + std::to_string(i));
  }
  auto check_line = [&](const BoundaryLine& l, const std::string& side) {
    for (std::size_t k = 0; k < l.comparisons.size(); ++k)
      schema(l.comparisons[k].factor < h.factors.size(), "comparison refers to a missing factor",
             "/boundary/" + side + "/comparisons/" + std::to_string(k));
  };
  check_line(h.at_a, "a");
  check_line(h.at_b, "b");
}

StripHypotheses normalize_exponents(const StripHypotheses& h) {
  StripHypotheses out = h;
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    Factor& f = out.factors[i];
    const Real& lo = f.alpha.value().lo() <= f.beta.value().lo() ? f.alpha : f.beta;
    if (lo.value().lo() >= 0) continue;
    if (!f.upper_growth)
      throw Error(Errc::kMissingGrowthAttestation,
                  "factor " + f.name + " has a negative exponent but no upper growth attestation",
                  "/factors/" + std::to_string(i));
    Real s = -lo;
    f.alpha = f.alpha + s;
    f.beta = f.beta + s;
    f.shift = f.shift + s;
  }
  out.normalized = true;
  return out;
}

std::optional<std::pair<Rational, Rational>> exponent_affine(const Real& alpha, const Real& beta, const Real& a,
                                                             const Real& b) {
  auto al = alpha.rational(), be = beta.rational(), av = a.rational(), bv = b.rational();
  if (!al || !be || !av || !bv) return std::nullopt;
  auto diff = sub(*be, *al);
  auto w = sub(*bv, *av);
  if (!diff || !w) return std::nullopt;
  auto c1 = div(*diff, *w);
  if (!c1) return std::nullopt;
  auto c1a = mul(*c1, *av);
  if (!c1a) return std::nullopt;
  auto c0 = sub(*al, *c1a);
  if (!c0) return std::nullopt;
  return std::make_pair(*c0, *c1);
}

std::string exponent_text(const Real& alpha, const Real& beta, const Real& a, const Real& b) {
  if (auto ab = exponent_affine(alpha, beta, a, b)) {
    const auto& [c0, c1] = *ab;
    if (c1.is_zero()) return rational_text(c0);
    std::string s;
    if (!c0.is_zero()) s = rational_text(c0) + (c1.sign() > 0 ? " + " : " - ");
    else if (c1.sign() < 0) s = "-";
    Rational m = c1.sign() < 0 ? *mul(c1, Rational(-1)) : c1;
    return s + (m == Rational(1) ? std::string() : rational_text(m) + "*") + "sigma";
  }
  if (alpha.same_value(beta)) return alpha.canonical();
  std::string w = "(" + b.text() + ")-(" + a.text() + ")";
  return "(" + alpha.text() + ")*((" + b.text() + ")-sigma)/(" + w + ") + (" + beta.text() + ")*(sigma-(" + a.text() +
         "))/(" + w + ")";
}

Certificate certify_strip(const StripHypotheses& hin, const CertifyOptions& opt) {
  validate_hypotheses(hin);
  StripHypotheses h = hin.normalized ? hin : normalize_exponents(hin);
  Certificate c;
  c.hyp = h;
  c.toolchain = toolchain_fingerprint();
  c.conclusion = conclusion_text(h);
  VerifyOptions vo = opt.verify;
  vo.budget = std::min(vo.budget, h.budget);
  const Real fa = opt.fact_strip ? opt.fact_strip->first : h.a;
  const Real fb = opt.fact_strip ? opt.fact_strip->second : h.b;
  if (opt.fact_strip && !(fa.value().lo() <= h.a.value().lo() && h.b.value().hi() <= fb.value().hi()))
    throw Error(Errc::kSchemaError, "fact strip must contain the strip", "/fact_strip");
  const std::string strip_key = "[" + fa.canonical() + "," + fb.canonical() + "]";

  for (std::size_t i = 0; i < h.factors.size(); ++i) {
    const Factor& f = h.factors[i];
    bool decided = true;
    int cmp = compare_exponents(f.alpha, f.beta, &decided);
    if (!decided) {
      Fact x;
      x.kind = FactKind::kBudgetExhausted;
      x.check = "monotone";
      x.claim = "exponents of " + f.name + " cannot be ordered";
      c.facts.push_back(x);
    } else if (cmp != 0) {
      Direction dir = cmp > 0 ? Direction::kIncreasing : Direction::kDecreasing;
      MonotoneOptions mo{h.T0, h.T_cap, h.T_max};
      std::string key = "monotone|" + canonical(f.g) + "|" + strip_key + "|" + (cmp > 0 ? "inc" : "dec") + "|" +
                        fmt(h.T0) + "|" + (h.T_max ? fmt(*h.T_max) : "-");
      try {
        c.facts.push_back(cached(key, [&] { return verify_monotone_sigma(f.g, fa, fb, dir, mo, vo); }));
      } catch (const Error& e) {
        if (e.code() != Errc::kNoTailLemma) throw;
        Fact x;
        x.kind = FactKind::kBudgetExhausted;
        x.check = "monotone";
        x.claim = "|" + to_string(f.g) + "| monotone in sigma";
        x.notes.push_back(e.what());
        c.facts.push_back(x);
      }
    }
    std::string key = "nonvanishing|" + canonical(f.g) + "|" + strip_key + "|" + fmt(h.T_cap);
    c.facts.push_back(cached(key, [&] { return verify_nonvanishing(f.g, fa, fb, h.T_cap, h.T_max, vo); }));
  }

  Target target = make_target(h.f);
  if (h.T0 > 0) {
    Target wrapped = target;
    bool shifted = false;
    for (const auto& f : h.factors) shifted = shifted || !f.shift.same_value(Real(0));
    if (shifted) {
      std::vector<Factor> fs = h.factors;
      AbsFn base = target.abs;
      wrapped.name = target.name + "*prod G^shift";
      wrapped.pole_lemma = false;
      wrapped.abs = [fs, base](const Box& b) {
        RealInterval v = base(b);
        for (const auto& f : fs)
          if (!f.shift.same_value(Real(0))) v = v * pow(abs_eval(f.g, b.s()), f.shift.value());
        return v;
      };
    }
    c.facts.push_back(verify_small_t(wrapped, power_factors(h, false), h.a, h.b, h.T0, vo));
  }

  auto line_facts = [&](const BoundaryLine& l, const Real& x) {
    if (!l.attested.empty())
      c.attestations.push_back("boundary sigma = " + x.text() + ": " + l.attested +
                               (l.citation.empty() ? "" : " [" + l.citation + "]"));
    if (l.pole_factor) c.facts.push_back(verify_pole_factor_le_one(x));
    if (l.verify_to > 0)
      c.facts.push_back(verify_line(target, power_factors(h, true), h.a, h.b, x, 0.0, l.verify_to, vo));
    for (const auto& cmpn : l.comparisons) {
      const Factor& f = h.factors[cmpn.factor];
      auto sh = classify(f.g);
      if (!sh) {
        Fact x;
        x.kind = FactKind::kBudgetExhausted;
        x.check = "classical_le";
        x.claim = "comparison for " + f.name;
        x.notes.push_back("factor is not a catalog shape");
        c.facts.push_back(x);
        continue;
      }
      std::string key = "classical|" + canonical(f.g) + "|" + x.canonical() + "|" + fmt(cmpn.t_from);
      c.facts.push_back(cached(key, [&] { return verify_classical_le(f.g, *sh, x, cmpn.t_from, h.T_cap, vo); }));
    }
  };
  line_facts(h.at_a, h.a);
  line_facts(h.at_b, h.b);

  c.attestations.push_back("growth: " +
                           (h.growth.statement.empty()
                                ? "|f(sigma+it)| < C1 exp(C2 e^(C3|t|)) and |G_i| > C1 exp(-C2 e^(C3|t|))"
                                : h.growth.statement) +
                           " with C1 = " + h.growth.C1.text() + ", C2 = " + h.growth.C2.text() +
                           ", C3 = " + h.growth.C3.text());
  c.attestations.push_back("symmetry: conj(f(conj s)) = f(s); G_i have real coefficients");
  for (const auto& f : h.factors)
    if (f.upper_growth) c.attestations.push_back("upper growth of " + f.name + ": " + *f.upper_growth);
  for (const auto& a : h.attestations) c.attestations.push_back(a);

  for (const auto& f : opt.extra_facts) c.facts.push_back(f);
  std::stable_sort(c.facts.begin(), c.facts.end(), [](const Fact& x, const Fact& y) { return x.id() < y.id(); });
  c.status = fold_status(c.facts);
  return c;
}

RealInterval bound_at(const Certificate& c, const RealInterval& sigma, const RealInterval& t) {
  if (c.status != Status::kCertified && c.status != Status::kConditional)
    throw Error(Errc::kStatusNotCertified, std::string("certificate status is ") + status_name(c.status));
  const StripHypotheses& h = c.hyp;
  RealInterval v(1.0);
  ComplexRect s(sigma, t);
  for (const auto& f : h.factors) {
    RealInterval e = exponent_at(original_alpha(f).value(), original_beta(f).value(), h.a, h.b, sigma);
    RealInterval m = abs_eval(f.g, s);
    if (!(m.lo() > 0)) throw Error(Errc::kDomainViolation, "factor " + f.name + " vanishes in the enclosure");
    v = v * pow(m, e);
  }
  return v;
}

// ---- constants ----------------------------------------------------------------

namespace {

// Tail variables for u in [u_lo, u_hi], u = 1/t.
TailVars vars_for_u(double u_lo, double u_hi) {
  TailVars tv;
  RealInterval one(1.0);
  tv.u = RealInterval(u_lo, u_hi);
  RealInterval t_lo = one / RealInterval(u_hi);
  tv.T = t_lo.lo();
  RealInterval l_lo = log(t_lo);
  double v_lo = 0.0, lam_lo = 0.0;
  if (u_lo > 0) {
    RealInterval t_hi = one / RealInterval(u_lo);
    RealInterval l_hi = log(t_hi);
    v_lo = (one / l_hi).lo();
    lam_lo = (one / log(l_hi)).lo();
  }
  tv.v = RealInterval(v_lo, (one / l_lo).hi());
  tv.lambda = RealInterval(lam_lo, (one / log(l_lo)).hi());
  return tv;
}

TailVars vars_at_point(double t) {
  TailVars tv;
  RealInterval tt(t);
  RealInterval one(1.0);
  tv.T = t;
  tv.u = one / tt;
  tv.v = one / log(tt);
  tv.lambda = one / log(log(tt));
  return tv;
}

RealInterval ratio_value(const RatioSpec& spec, const RealInterval& sigma, const TailVars& tv) {
  RealInterval v(1.0);
  for (const auto& p : spec.parts) {
    RealInterval x;
    switch (p.kind) {
      case RatioPart::Kind::kPole: x = pole_ratio_tail(sigma, tv); break;
      case RatioPart::Kind::kLinear: x = linear_ratio_tail(p.shift.value(), sigma, tv); break;
      case RatioPart::Kind::kSymLog: x = symlog_ratio(p.shape, sigma, tv); break;
    }
    if (p.alpha.same_value(Real(1)) && p.beta.same_value(Real(1))) {
      v = v * x;
    } else {
      RealInterval e = exponent_at(p.alpha.value(), p.beta.value(), spec.a, spec.b, sigma);
      v = v * pow(x, e);
    }
  }
  return v;
}

}  // namespace

ConstantResult ratio_sup(const RatioSpec& spec, double t0, std::size_t budget) {
  if (!(t0 >= 3.0)) throw Error(Errc::kDomainViolation, "t0 must be at least 3");
  const RealInterval strip(spec.a.value().lo(), spec.b.value().hi());
  const double inv_t0 = (RealInterval(1.0) / RealInterval(t0)).hi();
  // Box.t carries x in [0,1] with u = x / t0.
  auto u_range = [&](const RealInterval& x) {
    double lo = x.lo() <= 0 ? 0.0 : (RealInterval(x.lo()) * RealInterval(inv_t0)).lo();
    double hi = std::min(inv_t0, (RealInterval(x.hi()) * RealInterval(inv_t0)).hi());
    return std::make_pair(std::max(lo, 0.0), hi);
  };
  AbsFn f = [&](const Box& b) {
    auto [lo, hi] = u_range(b.t);
    return ratio_value(spec, b.sigma, vars_for_u(lo, hi));
  };
  AbsFn pf = [&](const Box& b) {
    double x = b.t.mid();
    double t = x <= 0 ? t0 * 1e6 : t0 / x;
    return ratio_value(spec, b.sigma, vars_at_point(t));
  };
  // Witness along t = t0 to size the tolerance.
  double witness = 0.0;
  for (int k = 0; k <= 32; ++k) {
    double s = strip.lo() + strip.width() * k / 32;
    s = std::clamp(s, spec.a.value().hi(), spec.b.value().lo());
    witness = std::max(witness, ratio_value(spec, RealInterval(s), vars_at_point(t0)).lo());
  }
  double tol = std::max(5e-15, 1e-3 * std::max(0.0, witness - 1.0));
  SupResult r = bound_sup(f, pf, Box{strip, RealInterval(0.0, 1.0)}, tol, budget);
  ConstantResult out;
  double lower = std::max(r.lower, witness);
  out.value = RealInterval(std::min(lower, r.upper), r.upper);
  out.converged = r.converged;
  out.ge_one = lower >= 1.0;
  out.boxes = r.boxes;
  out.sigma_at = r.argmax.sigma.mid();
  return out;
}

ConstantResult extract_constant(const Certificate& c, const RatioSpec& spec, double t0, std::size_t budget) {
  if (c.status != Status::kCertified && c.status != Status::kConditional)
    throw Error(Errc::kStatusNotCertified, std::string("certificate status is ") + status_name(c.status));
  return ratio_sup(spec, t0, budget);
}

RenderedBound final_inequality(const Certificate& c, const RatioSpec& spec, double t0) {
  ConstantResult k = extract_constant(c, spec, t0);
  RenderedBound r;
  r.factor_upper = k.value.hi();
  r.t0 = t0;
  const StripHypotheses& h = c.hyp;
  std::string f = h.f == "f_zeta" && spec.parts.size() > 0 && spec.parts[0].kind == RatioPart::Kind::kPole
                      ? "zeta"
                      : h.f;
  std::string s = "|" + f + "(sigma+it)| <= " + fmt(k.value.hi());
  for (const auto& fa : h.factors) {
    std::string e = exponent_text(original_alpha(fa), original_beta(fa), h.a, h.b);
    r.exponents.push_back({fa.name, e});
    std::string term = factor_text(fa, h.a, h.b, true);
    if (!term.empty()) s += " * " + term;
  }
  s += " for sigma in [" + spec.a.text() + ", " + spec.b.text() + "], t > " + fmt(t0);
  if (c.status == Status::kConditional) s += " [conditional]";
  r.text = s;
  return r;
}

}  // namespace plc
