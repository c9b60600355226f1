// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcert/tail.hpp"

#include <algorithm>
#include <cmath>

namespace plc {

TailVars TailVars::at(double T) {
  if (!(T > 3.0)) throw Error(Errc::kDomainViolation, "tail variables need T > 3");
  TailVars tv;
  tv.T = T;
  RealInterval tt(T);
  tv.u = RealInterval(0.0, (RealInterval(1.0) / tt).hi());
  RealInterval lt = log(tt);
  tv.v = RealInterval(0.0, (RealInterval(1.0) / lt).hi());
  tv.lambda = RealInterval(0.0, (RealInterval(1.0) / log(lt)).hi());
  return tv;
}

namespace {

RealInterval centre(const Shape& sh) { return ((sh.q2 - sh.q1) / Real(2)).value(); }

RealInterval log_t_lower(const TailVars& tv) { return RealInterval(log(RealInterval(tv.T)).lo()); }

}  // namespace

SymLogScaled symlog_scaled(const Shape& sh, const RealInterval& sigma, const RealInterval& u) {
  SymLogScaled r;
  RealInterval a1 = sh.q1.value() + sigma;
  RealInterval a2 = sh.q2.value() - sigma;
  if (!(a1.lo() > 0 && a2.lo() > 0)) throw Error(Errc::kDomainViolation, "symlog tail needs Q1+sigma > 0 and Q2-sigma > 0");
  r.x1 = a1 * u;
  r.x2 = a2 * u;
  RealInterval y1 = sqr(r.x1), y2 = sqr(r.x2);
  r.p1 = RealInterval(1.0) + y1;
  r.p2 = RealInterval(1.0) + y2;
  r.ahat = RealInterval(0.25) * (sqr(a1) * log1p_over(y1) + sqr(a2) * log1p_over(y2));
  r.delta = sigma - centre(sh);
  RealInterval q = RealInterval(1.0) + r.x1 * r.x2;
  RealInterval y = RealInterval(2.0) * r.delta * u / q;
  r.b1 = atan_over(y) / q;
  r.bhat = -(r.delta * r.b1);
  return r;
}

RealInterval symlog_monotone_bracket(const Shape& sh, const RealInterval& sigma, const TailVars& tv) {
  SymLogScaled z = symlog_scaled(sh, sigma, tv.u);
  RealInterval one(1.0);
  RealInterval c1 = one - z.x1 * z.x2;
  if (c1.lo() < 0) return RealInterval(-1.0, 1.0);
  RealInterval r1 = c1 / (z.p1 * z.p2);
  RealInterval half_sum = RealInterval(0.5) * (one / z.p1 + one / z.p2);
  RealInterval l0 = log_t_lower(tv);
  RealInterval re_s = l0 + z.ahat * sqr(tv.u);  // lower bound of Re S, monotone use
  RealInterval ks = re_s * r1 + z.b1 * half_sum;
  switch (sh.phi) {
    case Shape::Phi::kAffine: {
      const RealInterval m = sh.m.value();
      const RealInterval d = sh.d.value();
      if (!(m.lo() > 0)) return RealInterval(-1.0, 1.0);
      RealInterval lin = m * re_s + d;
      if (lin.lo() < 0) return RealInterval(-1.0, 1.0);
      return r1 * lin + m * z.b1 * half_sum;
    }
    case Shape::Phi::kPow:
      if (!(sh.c.value().lo() > 0 && sh.p.value().lo() > 0)) return RealInterval(-1.0, 1.0);
      return ks;
    case Shape::Phi::kQuotLog: {
      if (!(sh.c.value().lo() > 0)) return RealInterval(-1.0, 1.0);
      RealInterval lam = tv.lambda;
      if (!(lam.hi() < 1.0)) return RealInterval(-1.0, 1.0);
      RealInterval ks_lo(ks.lo());
      if (ks_lo.lo() < 0) return RealInterval(-1.0, 1.0);
      // Phi = K_S (1 - Re l/|l|^2) + b1 g2 (I1 + u^2 delta^2 b1 R1/(L+A)) / |l|^2
      RealInterval g2 = atan_over(tv.u * z.bhat * tv.v);
      RealInterval i1 = -half_sum;
      RealInterval extra = sqr(tv.u) * sqr(z.delta) * z.b1 * r1 * tv.v;
      RealInterval inv_l2(0.0, sqr(lam).hi());
      RealInterval first = ks_lo * (one - RealInterval(0.0, lam.hi()));
      return first + z.b1 * g2 * (i1 + extra) * inv_l2;
    }
  }
  return RealInterval(-1.0, 1.0);
}

double shape_tail_lower(const Shape& sh, const RealInterval& sigma, const TailVars& tv) {
  RealInterval l0 = log_t_lower(tv);
  switch (sh.kind) {
    case Shape::Kind::kConst: return abs(sh.c.value()).lo();
    case Shape::Kind::kLinear: return tv.T;  // |q +- s| >= t
    case Shape::Kind::kLog: return l0.lo();  // |log(q+s)| >= log|q+s| >= log t
    case Shape::Kind::kLogLog: {
      RealInterval ll = log(l0);
      return ll.lo() > 0 ? ll.lo() : 0.0;
    }
    case Shape::Kind::kSymLog: break;
  }
  SymLogScaled z = symlog_scaled(sh, sigma, tv.u);
  RealInterval re_s = l0 + z.ahat * sqr(tv.u);  // |S| >= Re S
  switch (sh.phi) {
    case Shape::Phi::kAffine: {
      RealInterval v = sh.m.value() * re_s + sh.d.value();
      return v.lo() > 0 ? v.lo() : 0.0;
    }
    case Shape::Phi::kPow: return (sh.c.value() * pow(re_s, sh.p.value())).lo();
    case Shape::Phi::kQuotLog: {
      // |log S| <= log|S| + pi/2 and x/(log x + pi/2) increases for x > 1, so
      // the value at x = lower bound of Re S bounds |S/log S| from below.
      RealInterval x(re_s.lo());
      if (!(x.lo() > 1.0)) return 0.0;
      double v = (sh.c.value() * x / (log(x) + RealInterval::half_pi())).lo();
      return v > 0 ? v : 0.0;
    }
  }
  return 0.0;
}

RealInterval symlog_ratio(const Shape& sh, const RealInterval& sigma, const TailVars& tv) {
  SymLogScaled z = symlog_scaled(sh, sigma, tv.u);
  RealInterval one(1.0);
  // w v with w = (A + iB)/v^-1 ... A = ahat u^2, B = bhat u, divided by L = 1/v
  ComplexRect wv(z.ahat * sqr(tv.u) * tv.v, z.bhat * tv.u * tv.v);
  ComplexRect s1 = ComplexRect(1.0, 0.0) + wv;
  switch (sh.phi) {
    case Shape::Phi::kAffine: {
      RealInterval m = sh.m.value();
      RealInterval k = m / (m + sh.d.value() * tv.v);
      return cx_abs(ComplexRect(1.0, 0.0) + k * wv);
    }
    case Shape::Phi::kPow: return pow(cx_abs(s1), sh.p.value());
    case Shape::Phi::kQuotLog: {
      ComplexRect den = ComplexRect(1.0, 0.0) + tv.lambda * cx_log(s1);
      return cx_abs(s1) / cx_abs(den);
    }
  }
  return RealInterval::entire();
}

RealInterval symlog_ratio_ge_one(const Shape& sh, const RealInterval& sigma, const TailVars& tv) {
  SymLogScaled z = symlog_scaled(sh, sigma, tv.u);
  switch (sh.phi) {
    case Shape::Phi::kAffine: {
      // |1 + k w v| >= 1 + k ahat u^2 v with k = m/(m + d v) > 0
      RealInterval m = sh.m.value();
      RealInterval den = m + sh.d.value() * tv.v;
      if (!(m.lo() > 0 && den.lo() > 0)) return RealInterval(-1.0, 1.0);
      return z.ahat;
    }
    case Shape::Phi::kPow:
      if (!(sh.p.value().lo() > 0)) return RealInterval(-1.0, 1.0);
      return z.ahat;
    case Shape::Phi::kQuotLog: {
      RealInterval lam(0.0, tv.lambda.hi());
      if (!(lam.hi() < 1.0)) return RealInterval(-1.0, 1.0);
      RealInterval lhs = RealInterval(2.0) * z.ahat * (RealInterval(1.0) - lam);
      RealInterval rhs = sqr(lam) * sqr(z.bhat) * tv.v;
      return RealInterval(lhs.lo()) - RealInterval(rhs.hi());
    }
  }
  return RealInterval(-1.0, 1.0);
}

RealInterval pole_ratio_tail(const RealInterval& sigma, const TailVars& tv) {
  RealInterval u2 = sqr(tv.u);
  RealInterval num = (RealInterval(2.0) * sigma - RealInterval(1.0)) * u2;
  RealInterval den = RealInterval(1.0) + sqr(sigma - RealInterval(1.0)) * u2;
  RealInterval inside = RealInterval(1.0) + num / den;
  return sqrt(inside);
}

RealInterval linear_ratio_tail(const RealInterval& c, const RealInterval& sigma, const TailVars& tv) {
  return sqrt(RealInterval(1.0) + sqr(c + sigma) * sqr(tv.u));
}

}  // namespace plc
