// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcert/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <sstream>

#include "plcert/parallel.hpp"
#include "plcert/zeta.hpp"

namespace plc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool splittable(const Error& e) {
  switch (e.code()) {
    case Errc::kDomainViolation:
    case Errc::kBranchCutViolation:
    case Errc::kPoleProximity:
    case Errc::kDivisorContainsZero: return true;
    default: return false;
  }
}

bool tiny(const RealInterval& x) {
  double scale = std::max(1.0, x.mag());
  return x.width() <= 1e-13 * scale;
}

std::pair<Box, Box> halve(const Box& b, bool along_sigma) {
  Box l = b, r = b;
  if (along_sigma) {
    double m = b.sigma.mid();
    l.sigma = RealInterval(b.sigma.lo(), m);
    r.sigma = RealInterval(m, b.sigma.hi());
  } else {
    double m = b.t.mid();
    l.t = RealInterval(b.t.lo(), m);
    r.t = RealInterval(m, b.t.hi());
  }
  return {l, r};
}

std::pair<Box, Box> split_longer(const Box& b) {
  if (b.sigma.is_point()) return halve(b, false);
  if (b.t.is_point()) return halve(b, true);
  return halve(b, b.sigma.width() >= b.t.width());
}

Box point_box(double sigma, double t) { return {RealInterval(sigma), RealInterval(t)}; }

Box mid_box(const Box& b) { return point_box(b.sigma.mid(), b.t.mid()); }

enum class Verdict { kAccept, kCounter, kSplit };

struct Judgement {
  Verdict verdict = Verdict::kSplit;
  double margin = kInf;
  RealInterval value;
  std::optional<Box> witness;  // counter box when narrower than the judged box
};

using Judge = std::function<Judgement(const Box&)>;
using Splitter = std::function<std::pair<Box, Box>(const Box&)>;

struct Outcome {
  FactKind kind = FactKind::kVerified;
  double margin = kInf;
  std::size_t boxes = 0;
  std::optional<Box> counter;
  RealInterval counter_value;
  bool hit_floor = false;
};

bool box_less(const Box& x, const Box& y) {
  if (x.sigma.lo() != y.sigma.lo()) return x.sigma.lo() < y.sigma.lo();
  return x.t.lo() < y.t.lo();
}

// Adaptive bisection with an explicit stack. Batches of boxes are judged in
// parallel; the reducer is sequential so the verdict does not depend on the
// thread count.
Outcome run_adaptive(std::vector<Box> work, const Judge& judge, const Splitter& split, std::size_t budget,
                     const VerifyOptions& opt, const std::string& check) {
  Outcome out;
  int threads = opt.threads > 0 ? opt.threads : thread_count();
  const std::size_t batch_cap = 64 * static_cast<std::size_t>(std::max(1, threads));
  std::size_t next_event = 10000;
  while (!work.empty()) {
    std::size_t n = std::min(work.size(), batch_cap);
    std::vector<Box> batch(work.end() - static_cast<std::ptrdiff_t>(n), work.end());
    work.resize(work.size() - n);
    std::vector<Judgement> res(n);
    parallel_for(
        n,
        [&](std::size_t i) {
          try {
            res[i] = judge(batch[i]);
          } catch (const Error& e) {
            if (!splittable(e)) throw;
            res[i] = Judgement{};
          }
        },
        threads);
    out.boxes += n;
    std::optional<std::size_t> counter;
    for (std::size_t i = 0; i < n; ++i) {
      const Judgement& j = res[i];
      if (j.verdict == Verdict::kAccept) {
        out.margin = std::min(out.margin, j.margin);
      } else if (j.verdict == Verdict::kCounter) {
        Box w = j.witness ? *j.witness : batch[i];
        if (!counter || box_less(w, *out.counter)) {
          counter = i;
          out.counter = w;
          out.counter_value = j.value;
        }
      } else {
        const Box& b = batch[i];
        if (tiny(b.sigma) && tiny(b.t)) {
          out.hit_floor = true;
          continue;
        }
        auto [l, r] = split(b);
        work.push_back(r);
        work.push_back(l);
      }
    }
    if (counter) {
      out.kind = FactKind::kCounterBox;
      return out;
    }
    if (opt.events && out.boxes >= next_event) {
      opt.events("{\"event\":\"progress\",\"check\":\"" + check + "\",\"boxes\":" + std::to_string(out.boxes) +
                 ",\"pending\":" + std::to_string(work.size()) + "}");
      next_event += 10000;
    }
    if (out.boxes >= budget && !work.empty()) {
      out.kind = FactKind::kBudgetExhausted;
      return out;
    }
  }
  out.kind = out.hit_floor ? FactKind::kBudgetExhausted : FactKind::kVerified;
  return out;
}

Fact to_fact(const Outcome& o, std::string check, std::string claim, std::string method) {
  Fact f;
  f.kind = o.kind;
  f.check = std::move(check);
  f.claim = std::move(claim);
  f.method = std::move(method);
  f.margin = o.margin == kInf ? 0.0 : o.margin;
  f.boxes = o.boxes;
  f.counter = o.counter;
  f.counter_value = o.counter_value;
  f.t_symmetric = true;
  if (o.hit_floor) f.notes.push_back("subdivision reached the resolution floor");
  return f;
}

void emit_done(const VerifyOptions& opt, const Fact& f) {
  if (!opt.events) return;
  opt.events("{\"event\":\"fact\",\"check\":\"" + f.check + "\",\"kind\":\"" + fact_kind_name(f.kind) +
             "\",\"boxes\":" + std::to_string(f.boxes) + ",\"margin\":" + fmt(f.margin) + "}");
}

std::vector<Box> boundary_edges(const Box& r) {
  std::vector<Box> e;
  e.push_back({RealInterval(r.sigma.lo()), r.t});
  if (r.sigma.hi() != r.sigma.lo()) e.push_back({RealInterval(r.sigma.hi()), r.t});
  e.push_back({r.sigma, RealInterval(r.t.lo())});
  if (r.t.hi() != r.t.lo()) e.push_back({r.sigma, RealInterval(r.t.hi())});
  return e;
}

std::vector<Box> initial(const RegionCheck& rc) {
  if (!(rc.region.sigma.lo() <= rc.region.sigma.hi() && rc.region.t.lo() <= rc.region.t.hi()))
    throw Error(Errc::kDomainViolation, "empty region");
  if (rc.mode == Mode::kBoundaryOnly) {
    if (!rc.target.holomorphic) throw Error(Errc::kDomainViolation, "boundary mode needs a holomorphic target");
    return boundary_edges(rc.region);
  }
  return {rc.region};
}

std::string region_text(const RegionCheck& rc) {
  return "[" + fmt(rc.region.sigma.lo()) + "," + fmt(rc.region.sigma.hi()) + "]x[" + fmt(rc.region.t.lo()) + "," +
         fmt(rc.region.t.hi()) + "]";
}

// Lower bound of min over sigma' in [a,b] of |G(sigma' + i t)|.
double min_abs_lower(const GExpr& g, const Real& a, const Real& b, const RealInterval& t, int pieces) {
  double lo = kInf;
  double av = a.value().lo(), bv = b.value().hi();
  for (int k = 0; k < pieces; ++k) {
    double s0 = av + (bv - av) * k / pieces;
    double s1 = k + 1 == pieces ? bv : av + (bv - av) * (k + 1) / pieces;
    RealInterval v = abs_eval(g, ComplexRect(RealInterval(s0, s1), t));
    lo = std::min(lo, v.lo());
  }
  return lo;
}

// Upper bound of min over sigma' of |G(sigma' + i t)| at a point t.
double min_abs_upper(const GExpr& g, const Real& a, const Real& b, double t, int pieces) {
  double hi = kInf;
  double av = a.value().mid(), bv = b.value().mid();
  for (int k = 0; k <= pieces; ++k) {
    double s = av + (bv - av) * k / pieces;
    s = std::clamp(s, a.value().hi(), b.value().lo());
    hi = std::min(hi, abs_eval(g, ComplexRect(s, t)).hi());
  }
  return hi;
}

// G^e for a positive enclosure; the lower or upper end of the result.
RealInterval pow_pos(const RealInterval& m, const RealInterval& e) {
  if (!(m.lo() > 0)) throw Error(Errc::kDomainViolation, "power of a non-positive modulus");
  return pow(m, e);
}

// Unique zero of g in X when the Krawczyk operator maps X into its interior.
bool krawczyk_zero(const GExpr& g, const GExpr& dg, const ComplexRect& x) {
  try {
    ComplexRect m(x.re.mid(), x.im.mid());
    ComplexRect gm = eval(g, m);
    ComplexRect dm = eval(dg, m);
    double dr = dm.re.mid(), di = dm.im.mid();
    double nn = dr * dr + di * di;
    if (!(nn > 0)) return false;
    ComplexRect y(dr / nn, -di / nn);
    ComplexRect dx = eval(dg, x);
    ComplexRect k = m - y * gm + (ComplexRect(1.0, 0.0) - y * dx) * (x - m);
    return x.re.lo() < k.re.lo() && k.re.hi() < x.re.hi() && x.im.lo() < k.im.lo() && k.im.hi() < x.im.hi();
  } catch (const Error& e) {
    if (splittable(e)) return false;
    throw;
  }
}

std::string direction_name(Direction d) { return d == Direction::kIncreasing ? "increasing" : "decreasing"; }

// Checks pred over sigma slices of [a,b], bisecting up to depth 14.
bool for_sigma_slices(const RealInterval& range, const std::function<bool(const RealInterval&)>& pred) {
  std::vector<std::pair<RealInterval, int>> st{{range, 0}};
  while (!st.empty()) {
    auto [s, d] = st.back();
    st.pop_back();
    bool ok = false;
    try {
      ok = pred(s);
    } catch (const Error& e) {
      if (!splittable(e)) throw;
    }
    if (ok) continue;
    if (d >= 14 || s.is_point()) return false;
    double m = s.mid();
    st.push_back({RealInterval(s.lo(), m), d + 1});
    st.push_back({RealInterval(m, s.hi()), d + 1});
  }
  return true;
}

}  // namespace

// ---- basics -----------------------------------------------------------------

std::string Box::str() const { return sigma.str() + " x " + t.str(); }

const char* fact_kind_name(FactKind k) {
  switch (k) {
    case FactKind::kVerified: return "verified";
    case FactKind::kConditional: return "conditional";
    case FactKind::kCounterBox: return "counter_box";
    case FactKind::kBudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

std::string Fact::id() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  mix(check);
  mix(claim);
  mix(method);
  mix(fact_kind_name(kind));
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::size_t default_budget() { return 1000000; }

Target f_zeta_target(double width) {
  Target t;
  t.name = "f_zeta";
  t.abs = [width](const Box& b) { return cx_abs(f_zeta(b.s(), width)); };
  t.pole_lemma = true;
  return t;
}

Target zeta_target(double width) {
  Target t;
  t.name = "zeta";
  t.abs = [width](const Box& b) { return cx_abs(zeta_em(b.s(), width)); };
  return t;
}

Target gexpr_target(const GExpr& g) {
  Target t;
  t.name = to_string(g);
  t.abs = [g](const Box& b) { return abs_eval(g, b.s()); };
  return t;
}

RealInterval exponent_at(const RealInterval& alpha, const RealInterval& beta, const Real& a, const Real& b,
                         const RealInterval& sigma) {
  RealInterval w = (sigma - a.value()) / (b.value() - a.value());
  w = intersect(w, RealInterval(0.0, 1.0));
  return alpha + (beta - alpha) * w;
}

// ---- sup / inf ----------------------------------------------------------------

namespace {

// An undecided box may still hold a violating point; without this the
// bisection can follow the level set |f| = bound down to the floor.
template <class Bad>
void probe_mid(const Target& tg, const Box& b, Bad bad, Judgement& j) {
  Box m = mid_box(b);
  try {
    RealInterval v = tg.abs(m);
    if (bad(v)) {
      j.verdict = Verdict::kCounter;
      j.value = v;
      j.witness = m;
    }
  } catch (const Error& e) {
    if (!splittable(e)) throw;
  }
}

}  // namespace

Fact verify_sup(const RegionCheck& rc, const VerifyOptions& opt) {
  if (!(rc.bound.lo() > 0)) throw Error(Errc::kDomainViolation, "bound must be positive");
  const Target& tg = rc.target;
  const RealInterval bound = rc.bound;
  Judge judge = [&](const Box& b) {
    Judgement j;
    if (tg.pole_lemma && bound.lo() >= 1.0 && pole_lemma_covers(b.s())) {
      j.verdict = Verdict::kAccept;
      j.margin = bound.lo() - 1.0;
      return j;
    }
    RealInterval v = tg.abs(b);
    j.value = v;
    if (v.hi() <= bound.lo()) {
      j.verdict = Verdict::kAccept;
      j.margin = bound.lo() - v.hi();
    } else if (v.lo() > bound.hi()) {
      j.verdict = Verdict::kCounter;
    } else {
      probe_mid(tg, b, [&](const RealInterval& m) { return m.lo() > bound.hi(); }, j);
    }
    return j;
  };
  std::size_t budget = std::min(rc.budget, opt.budget);
  Outcome o = run_adaptive(initial(rc), judge, split_longer, budget, opt, "sup");
  std::string where = rc.mode == Mode::kBoundaryOnly ? "boundary of " : "";
  Fact f = to_fact(o, "sup", "|" + tg.name + "| <= " + fmt(bound.hi()) + " on " + where + region_text(rc),
                   rc.mode == Mode::kBoundaryOnly ? "adaptive bisection, maximum modulus on the boundary"
                                                  : "adaptive bisection over the region");
  if (rc.mode == Mode::kBoundaryOnly) f.notes.push_back("target asserted holomorphic on the region");
  if (tg.pole_lemma) {
    const PoleLemma& pl = pole_lemma();
    f.notes.push_back("pole lemma on [1, 1+" + fmt(pl.delta) + "]: sup|q| <= " + fmt(pl.m0) + ", sup Re q <= " +
                      fmt(pl.re_q) + ", inf Re q' >= " + fmt(pl.dq));
  }
  emit_done(opt, f);
  return f;
}

Fact verify_inf(const RegionCheck& rc, const VerifyOptions& opt) {
  const Target& tg = rc.target;
  const RealInterval bound = rc.bound;
  Judge judge = [&](const Box& b) {
    Judgement j;
    RealInterval v = tg.abs(b);
    j.value = v;
    bool pos = bound.hi() > 0 ? v.lo() >= bound.hi() : v.lo() > 0;
    if (pos) {
      j.verdict = Verdict::kAccept;
      j.margin = v.lo() - bound.hi();
    } else if (v.hi() < bound.lo()) {
      j.verdict = Verdict::kCounter;
    } else {
      probe_mid(tg, b, [&](const RealInterval& m) { return m.hi() < bound.lo(); }, j);
    }
    return j;
  };
  std::size_t budget = std::min(rc.budget, opt.budget);
  Outcome o = run_adaptive(initial(rc), judge, split_longer, budget, opt, "inf");
  Fact f = to_fact(o, "inf", "|" + tg.name + "| >= " + fmt(bound.lo()) + " on " + region_text(rc),
                   "adaptive bisection over the region");
  emit_done(opt, f);
  return f;
}

// ---- monotonicity -------------------------------------------------------------

namespace {

// Sign of D = Re(conj G G') on [a,b] x [t0,t1]. Near a symmetry center c,
// D(c) = 0 and D(sigma) has the sign of the integral of
// D_sigma = |G'|^2 + Re(conj G G'') from c.
Outcome monotone_finite(const GExpr& g, const Real& a, const Real& b, Direction dir, double t0, double t1,
                        const VerifyOptions& opt) {
  const GExpr dg = deriv(g);
  const GExpr ddg = deriv(dg);
  const int want = dir == Direction::kIncreasing ? 1 : -1;
  std::optional<double> centre;
  if (auto c = symmetry_center(g); c && c->value().is_point()) centre = c->value().lo();
  auto d_of = [](const ComplexRect& gv, const ComplexRect& dv) { return gv.re * dv.re + gv.im * dv.im; };
  Judge judge = [&](const Box& b) {
    Judgement j;
    ComplexRect s = b.s();
    RealInterval d = d_of(eval(g, s), eval(dg, s));
    j.value = d;
    double lo = want > 0 ? d.lo() : -d.hi();
    double hi = want > 0 ? d.hi() : -d.lo();
    if (lo > 0) {
      j.verdict = Verdict::kAccept;
      j.margin = lo;
      return j;
    }
    if (hi < 0) {
      j.verdict = Verdict::kCounter;
      return j;
    }
    if (centre) {
      double c = *centre;
      bool right = b.sigma.lo() >= c;
      bool left = b.sigma.hi() <= c;
      if ((want > 0 && right) || (want < 0 && left)) {
        RealInterval span = right ? RealInterval(c, b.sigma.hi()) : RealInterval(b.sigma.lo(), c);
        ComplexRect hs(span, b.t);
        ComplexRect gv = eval(g, hs), dv = eval(dg, hs), ddv = eval(ddg, hs);
        RealInterval ds = cx_norm(dv) + d_of(gv, ddv);
        if (ds.lo() > 0) {
          j.verdict = Verdict::kAccept;
          j.margin = 0.0;
          return j;
        }
      }
    }
    return j;
  };
  Box region{RealInterval(a.value().lo(), b.value().hi()), RealInterval(t0, t1)};
  return run_adaptive({region}, judge, split_longer, opt.budget, opt, "monotone");
}

// Tail lemma for t >= T. Returns true when proven.
bool monotone_tail(const Shape& sh, const Real& a, const Real& b, Direction dir, double T, std::string* why) {
  RealInterval strip(a.value().lo(), b.value().hi());
  switch (sh.kind) {
    case Shape::Kind::kConst: return true;
    case Shape::Kind::kLinear: {
      RealInterval q = sh.q1.value();
      if (sh.sign > 0) return dir == Direction::kIncreasing && (q + strip).lo() > 0;
      return dir == Direction::kDecreasing && (q - strip).lo() > 0;
    }
    case Shape::Kind::kLog:
    case Shape::Kind::kLogLog:
      *why = "no monotonicity tail lemma for log-type factors";
      return false;
    case Shape::Kind::kSymLog: break;
  }
  RealInterval delta = strip - ((sh.q2 - sh.q1) / Real(2)).value();
  if (dir == Direction::kIncreasing && delta.lo() < 0) {
    *why = "strip extends left of the symmetry center";
    return false;
  }
  if (dir == Direction::kDecreasing && delta.hi() > 0) {
    *why = "strip extends right of the symmetry center";
    return false;
  }
  TailVars tv = TailVars::at(T);
  bool ok = for_sigma_slices(strip, [&](const RealInterval& s) { return symlog_monotone_bracket(sh, s, tv).lo() > 0; });
  if (!ok) *why = "tail bracket not positive at T = " + fmt(T);
  return ok;
}

}  // namespace

Fact verify_monotone_sigma(const GExpr& g, const Real& a, const Real& b, Direction dir, const MonotoneOptions& mo,
                           const VerifyOptions& opt) {
  const std::string claim =
      "|" + to_string(g) + "| " + direction_name(dir) + " in sigma on [" + a.text() + ", " + b.text() + "] for t >= " +
      fmt(mo.T0);
  auto sh = classify(g);
  Fact f;
  f.check = "monotone";
  f.claim = claim;
  f.t_symmetric = true;
  RealInterval strip(a.value().lo(), b.value().hi());
  if (sh && sh->kind == Shape::Kind::kConst) {
    f.kind = FactKind::kVerified;
    f.method = "constant modulus";
    emit_done(opt, f);
    return f;
  }
  if (sh && sh->kind == Shape::Kind::kLinear) {
    // d|q + sign s|^2/dsigma = 2 sign (q + sign sigma)
    RealInterval q = sh->q1.value();
    RealInterval lin = sh->sign > 0 ? q + strip : q - strip;
    f.method = "exact: d|Q+s|^2/dsigma = 2(Q+sigma)";
    bool inc = sh->sign > 0;
    if (lin.lo() > 0) {
      bool good = inc == (dir == Direction::kIncreasing);
      if (good) {
        f.kind = FactKind::kVerified;
        f.margin = 2.0 * lin.lo();
      } else {
        f.kind = FactKind::kCounterBox;
        f.counter = point_box(strip.mid(), std::max(mo.T0, 1.0));
        f.counter_value = RealInterval(2.0) * lin;
      }
      emit_done(opt, f);
      return f;
    }
  }
  // Finite part and tail cap.
  double cap = std::max(mo.T_cap, mo.T0);
  std::string why;
  bool tail = false;
  if (sh) {
    for (double T = std::max(cap, 3.5); T <= 1e6; T *= 2) {
      if (monotone_tail(*sh, a, b, dir, T, &why)) {
        tail = true;
        cap = T;
        break;
      }
      if (sh->kind != Shape::Kind::kSymLog || why.rfind("tail bracket", 0) != 0) break;
    }
  } else {
    why = "expression is not a catalog shape";
  }
  double finite_hi = cap;
  if (!tail) {
    if (!mo.T_max) throw Error(Errc::kNoTailLemma, "no monotonicity tail lemma for " + to_string(g) + ": " + why);
    finite_hi = std::max(*mo.T_max, mo.T0);
  }
  Outcome o;
  if (finite_hi > mo.T0) o = monotone_finite(g, a, b, dir, mo.T0, finite_hi, opt);
  f = to_fact(o, "monotone", claim,
              tail ? "sign of Re(conj G G') on [" + fmt(mo.T0) + ", " + fmt(cap) + "], tail lemma for t >= " + fmt(cap)
                   : "sign of Re(conj G G') on [" + fmt(mo.T0) + ", " + fmt(finite_hi) + "]");
  if (!tail && f.kind == FactKind::kVerified) {
    f.kind = FactKind::kConditional;
    f.t_max = finite_hi;
    f.notes.push_back("tail unverified beyond t = " + fmt(finite_hi) + ": " + why);
  }
  emit_done(opt, f);
  return f;
}

Fact verify_nonvanishing(const GExpr& g, const Real& a, const Real& b, double T_cap, std::optional<double> T_max,
                         const VerifyOptions& opt) {
  auto sh = classify(g);
  RealInterval strip(a.value().lo(), b.value().hi());
  bool tail = false;
  double cap = T_cap;
  if (sh) {
    for (double T = std::max(T_cap, 3.5); T <= 1e6 && !tail; T *= 2) {
      TailVars tv = TailVars::at(T);
      tail = for_sigma_slices(strip, [&](const RealInterval& s) { return shape_tail_lower(*sh, s, tv) > 0; });
      if (tail) cap = T;
    }
  }
  double hi = tail ? cap : (T_max ? std::max(*T_max, T_cap) : T_cap);
  const GExpr dg = deriv(g);
  Judge judge = [&](const Box& b) {
    Judgement j;
    RealInterval v = abs_eval(g, b.s());
    j.value = v;
    if (v.lo() > 0) {
      j.verdict = Verdict::kAccept;
      j.margin = v.lo();
      return j;
    }
    if (b.sigma.width() < 1e-2 && b.t.width() < 1e-2) {
      ComplexRect x = b.s();
      if (b.t.lo() == 0.0) x.im = RealInterval(-b.t.hi(), b.t.hi());
      if (krawczyk_zero(g, dg, x)) {
        j.verdict = Verdict::kCounter;
        j.value = RealInterval(0.0);
      }
    }
    return j;
  };
  Box region{strip, RealInterval(0.0, hi)};
  Outcome o = run_adaptive({region}, judge, split_longer, opt.budget, opt, "nonvanishing");
  std::string claim = "G = " + to_string(g) + " has no zero on [" + a.text() + ", " + b.text() + "] x [0, inf)";
  Fact f = to_fact(o, "nonvanishing", claim,
                   tail ? "inf |G| > 0 on [0, " + fmt(hi) + "], shape lower bound beyond"
                        : "inf |G| > 0 on [0, " + fmt(hi) + "]");
  if (f.kind == FactKind::kCounterBox) f.notes.push_back("zero proven by the Krawczyk operator");
  if (!tail && f.kind == FactKind::kVerified) {
    f.kind = FactKind::kConditional;
    f.t_max = hi;
    f.notes.push_back("no tail lower bound for this expression");
  }
  emit_done(opt, f);
  return f;
}

// ---- small t and boundary lines ----------------------------------------------

Fact verify_small_t(const Target& f, const std::vector<PowerFactor>& factors, const Real& a, const Real& b, double T0,
                    const VerifyOptions& opt) {
  RealInterval strip(a.value().lo(), b.value().hi());
  Judge judge = [&](const Box& bx) {
    Judgement j;
    double fu;
    if (f.pole_lemma && pole_lemma_covers(bx.s())) {
      fu = 1.0;
    } else {
      fu = f.abs(bx).hi();
    }
    RealInterval rhs(1.0);
    for (const auto& pf : factors) {
      double m = min_abs_lower(pf.g, a, b, bx.t, 16);
      if (!(m > 0)) return j;
      RealInterval e = exponent_at(pf.alpha, pf.beta, a, b, bx.sigma);
      rhs = rhs * RealInterval(pow_pos(RealInterval(m), e).lo());
    }
    j.value = RealInterval(fu);
    if (fu < rhs.lo()) {
      j.verdict = Verdict::kAccept;
      j.margin = rhs.lo() - fu;
      return j;
    }
    // Refutation at the midpoint.
    Box pb = mid_box(bx);
    RealInterval fv = f.abs(pb);
    RealInterval up(1.0);
    for (const auto& pf : factors) {
      double m = min_abs_upper(pf.g, a, b, pb.t.lo(), 16);
      RealInterval e = exponent_at(pf.alpha, pf.beta, a, b, pb.sigma);
      up = up * RealInterval(pow_pos(RealInterval(m), e).hi());
    }
    if (fv.lo() >= up.hi()) {
      j.verdict = Verdict::kCounter;
      j.value = fv;
      j.witness = pb;
    }
    return j;
  };
  Box region{strip, RealInterval(0.0, T0)};
  Outcome o = run_adaptive({region}, judge, split_longer, opt.budget, opt, "small_t");
  Fact fact = to_fact(o, "small_t",
                      "|" + f.name + "| < prod min_sigma |G_i|^(e_i(sigma)) on [" + a.text() + ", " + b.text() +
                          "] x [0, " + fmt(T0) + "]",
                      "adaptive bisection; sigma-minimum over 16 sub-slices per box");
  emit_done(opt, fact);
  return fact;
}

Fact verify_line(const Target& f, const std::vector<PowerFactor>& factors, const Real& a, const Real& b, const Real& x,
                 double t_lo, double t_hi, const VerifyOptions& opt) {
  RealInterval xs = x.value();
  Judge judge = [&](const Box& bx) {
    Judgement j;
    double fu = f.pole_lemma && pole_lemma_covers(bx.s()) ? 1.0 : f.abs(bx).hi();
    RealInterval rhs(1.0);
    for (const auto& pf : factors) {
      RealInterval m = abs_eval(pf.g, bx.s());
      if (!(m.lo() > 0)) return j;
      RealInterval e = exponent_at(pf.alpha, pf.beta, a, b, xs);
      rhs = rhs * RealInterval(pow_pos(RealInterval(m.lo()), e).lo());
    }
    j.value = RealInterval(fu);
    if (fu <= rhs.lo()) {
      j.verdict = Verdict::kAccept;
      j.margin = rhs.lo() - fu;
      return j;
    }
    Box pb{bx.sigma, RealInterval(bx.t.mid())};
    RealInterval fv = f.abs(pb);
    RealInterval up(1.0);
    for (const auto& pf : factors) {
      RealInterval e = exponent_at(pf.alpha, pf.beta, a, b, xs);
      up = up * pow_pos(abs_eval(pf.g, pb.s()), e);
    }
    if (fv.lo() > up.hi()) {
      j.verdict = Verdict::kCounter;
      j.value = fv;
      j.witness = pb;
    }
    return j;
  };
  Box line{xs, RealInterval(t_lo, t_hi)};
  Splitter split = [](const Box& b) { return halve(b, false); };
  Outcome o = run_adaptive({line}, judge, split, opt.budget, opt, "line");
  Fact fact = to_fact(o, "line",
                      "|" + f.name + "(" + x.text() + "+it)| <= prod |G_i|^(e_i) for t in [" + fmt(t_lo) + ", " +
                          fmt(t_hi) + "]",
                      "adaptive bisection in t");
  emit_done(opt, fact);
  return fact;
}

Fact verify_classical_le(const GExpr& g, const Shape& sh, const Real& x, double t_from, double T_cap,
                         const VerifyOptions& opt) {
  const std::string phi = shape_phi_text(sh, "log t");
  const std::string claim = phi + " <= |G(" + x.text() + "+it)| for t >= " + fmt(t_from);
  Fact f;
  f.check = "classical_le";
  f.claim = claim;
  f.t_symmetric = true;
  if (sh.kind != Shape::Kind::kSymLog) {
    f.kind = FactKind::kBudgetExhausted;
    f.notes.push_back("comparison lemma only for SymLog shapes");
    return f;
  }
  RealInterval xs = x.value();
  double lemma_at = 0.0;
  for (double T = std::max(t_from, 3.01); T <= std::max(T_cap, 100.0) * 100; T *= 2) {
    TailVars tv = TailVars::at(T);
    if (symlog_ratio_ge_one(sh, xs, tv).lo() >= 0) {
      lemma_at = T;
      break;
    }
  }
  if (lemma_at == 0.0) {
    f.kind = FactKind::kBudgetExhausted;
    f.notes.push_back("ratio lemma did not close");
    emit_done(opt, f);
    return f;
  }
  Outcome o;
  if (lemma_at > t_from) {
    Judge judge = [&](const Box& bx) {
      Judgement j;
      RealInterval lhs = shape_phi(sh, log(bx.t));
      RealInterval rhs = abs_eval(g, bx.s());
      j.value = rhs - lhs;
      if (lhs.hi() <= rhs.lo()) {
        j.verdict = Verdict::kAccept;
        j.margin = rhs.lo() - lhs.hi();
      } else if (lhs.lo() > rhs.hi()) {
        j.verdict = Verdict::kCounter;
      }
      return j;
    };
    Splitter split = [](const Box& b) { return halve(b, false); };
    o = run_adaptive({Box{xs, RealInterval(t_from, lemma_at)}}, judge, split, opt.budget, opt, "classical_le");
  }
  f = to_fact(o, "classical_le", claim,
              lemma_at > t_from ? "direct comparison on [" + fmt(t_from) + ", " + fmt(lemma_at) +
                                      "], ratio lemma beyond"
                                : "ratio lemma for all t >= " + fmt(lemma_at));
  emit_done(opt, f);
  return f;
}

Fact verify_pole_factor_le_one(const Real& x) {
  // |(s-1)/s| <= 1 iff (x-1)^2 <= x^2 iff 2x - 1 >= 0
  Fact f;
  f.check = "pole_factor";
  f.claim = "|(s-1)/s| <= 1 on re(s) = " + x.text();
  f.method = "exact: 2x - 1 >= 0";
  RealInterval m = RealInterval(2.0) * x.value() - RealInterval(1.0);
  f.margin = m.lo();
  f.kind = m.lo() >= 0 ? FactKind::kVerified : FactKind::kCounterBox;
  if (f.kind == FactKind::kCounterBox) {
    f.counter = point_box(x.value().mid(), 0.0);
    f.counter_value = m;
  }
  f.t_symmetric = true;
  return f;
}

// ---- tail envelopes -----------------------------------------------------------

RealInterval tail_envelope_eval(const TailEnvelope& env, double t0) {
  if (t0 < env.T_cap) throw Error(Errc::kDomainViolation, "t0 below the envelope cap");
  TailVars tv = TailVars::at(t0);
  RealInterval strip(env.a.value().lo(), env.b.value().hi());
  if (env.kind == TailKind::kSymLogMonotone) {
    double lo = kInf;
    for (int k = 0; k < 64; ++k) {
      RealInterval s(strip.lo() + strip.width() * k / 64, k == 63 ? strip.hi() : strip.lo() + strip.width() * (k + 1) / 64);
      lo = std::min(lo, symlog_monotone_bracket(env.shape, s, tv).lo());
    }
    return RealInterval(lo);
  }
  auto ratio = [&](const RealInterval& s, const TailVars& v) {
    RealInterval r = env.kind == TailKind::kLinearRatio ? linear_ratio_tail(env.shift.value(), s, v)
                                                         : symlog_ratio(env.shape, s, v);
    if (env.with_pole) r = r * pole_ratio_tail(s, v);
    return r;
  };
  double hi = 0.0, lo = 0.0;
  TailVars pt = tv;
  pt.u = RealInterval(1.0) / RealInterval(t0);
  pt.v = RealInterval(1.0) / log(RealInterval(t0));
  pt.lambda = RealInterval(1.0) / log(log(RealInterval(t0)));
  for (int k = 0; k < 64; ++k) {
    RealInterval s(strip.lo() + strip.width() * k / 64, k == 63 ? strip.hi() : strip.lo() + strip.width() * (k + 1) / 64);
    hi = std::max(hi, ratio(s, tv).hi());
    lo = std::max(lo, ratio(RealInterval(s.mid()), pt).lo());
  }
  return RealInterval(std::min(lo, hi), hi);
}

// ---- maximization -------------------------------------------------------------

SupResult bound_sup(const AbsFn& f, const AbsFn& point_f, const Box& region, double abs_tol, std::size_t budget) {
  struct Item {
    double upper;
    Box box;
    bool operator<(const Item& o) const { return upper < o.upper; }
  };
  SupResult r;
  std::priority_queue<Item> pq;
  auto push = [&](const Box& b) {
    double up;
    try {
      up = f(b).hi();
    } catch (const Error& e) {
      if (!splittable(e)) throw;
      up = kInf;
    }
    pq.push({up, b});
    Box m = mid_box(b);
    try {
      double lo = point_f(m).lo();
      if (lo > r.lower) {
        r.lower = lo;
        r.argmax = m;
      }
    } catch (const Error& e) {
      if (!splittable(e)) throw;
    }
    ++r.boxes;
  };
  push(region);
  while (!pq.empty()) {
    const Item top = pq.top();
    if (top.upper - r.lower <= abs_tol) {
      r.upper = top.upper;
      r.converged = true;
      return r;
    }
    if (r.boxes >= budget || (tiny(top.box.sigma) && tiny(top.box.t))) {
      r.upper = top.upper;
      return r;
    }
    pq.pop();
    auto [l, rr] = split_longer(top.box);
    push(l);
    push(rr);
  }
  r.upper = r.lower;
  r.converged = true;
  return r;
}

}  // namespace plc
