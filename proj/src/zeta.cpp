// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcert/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace plc {

namespace {

#include "constants_table.inc"

RealInterval bernoulli_scaled(int k) { return {kBernoulliScaled[k - 1][0], kBernoulliScaled[k - 1][1]}; }

void validate(const EMParams& p) {
  if (p.N < 2 || p.K < 1 || p.K > 30)
    throw Error(Errc::kDomainViolation, "EMParams need N >= 2 and 1 <= K <= 30");
}

void require_right_half(const ComplexRect& s) {
  if (!(s.re.lo() > 0.0)) throw Error(Errc::kDomainViolation, "zeta evaluation needs re(s) > 0, got " + s.str());
}

constexpr int kLogTable = 1 << 14;

const std::vector<RealInterval>& log_table() {
  static const std::vector<RealInterval> table = [] {
    std::vector<RealInterval> t(kLogTable);
    t[0] = RealInterval(0.0);
    for (int n = 1; n < kLogTable; ++n) t[n] = log(RealInterval(static_cast<double>(n)));
    return t;
  }();
  return table;
}

RealInterval log_n(int n) {
  if (n < kLogTable) return log_table()[n];
  return log(RealInterval(static_cast<double>(n)));
}

// n^{-s}
ComplexRect npow(int n, const ComplexRect& s) { return cx_exp(-(log_n(n) * s)); }

// Sum_{n<N} n^{-s} + N^{-s}/2 + Bernoulli corrections + remainder disk.
ComplexRect em_regular(const ComplexRect& s, const EMParams& p, ComplexRect* n_pow_s) {
  validate(p);
  require_right_half(s);
  ComplexRect acc(1.0, 0.0);
  for (int n = 2; n < p.N; ++n) acc = acc + npow(n, s);
  ComplexRect ns = npow(p.N, s);
  *n_pow_s = ns;
  acc = acc + RealInterval(0.5) * ns;
  // T_k = B_2k/(2k)! (s)_{2k-1} N^{-s-2k+1}
  const RealInterval big_n(static_cast<double>(p.N));
  const RealInterval inv_n = RealInterval(1.0) / big_n;
  const RealInterval inv_n2 = sqr(inv_n);
  ComplexRect poch = s;                      // (s)_1
  ComplexRect npow_k = inv_n * ns;           // N^{-s-1}
  for (int k = 1; k <= p.K; ++k) {
    acc = acc + bernoulli_scaled(k) * (poch * npow_k);
    if (k < p.K) {
      double j = 2.0 * k - 1.0;
      poch = poch * (s + ComplexRect(j, 0.0)) * (s + ComplexRect(j + 1.0, 0.0));
      npow_k = inv_n2 * npow_k;
    }
  }
  return inflate(acc, em_remainder_bound(s, p));
}

}  // namespace

double em_remainder_bound(const ComplexRect& s, const EMParams& p) {
  validate(p);
  require_right_half(s);
  const int k = p.K;
  const double two_k1 = 2.0 * k + 1.0;
  RealInterval num = cx_abs(s + ComplexRect(two_k1, 0.0));
  RealInterval den = RealInterval(s.re.lo()) + RealInterval(two_k1);
  RealInterval r = RealInterval(num.hi()) / den;
  r = r * abs(bernoulli_scaled(k + 1));
  for (int j = 0; j <= 2 * k; ++j) r = r * RealInterval(cx_abs(s + ComplexRect(static_cast<double>(j), 0.0)).hi());
  RealInterval expo = -(RealInterval(s.re.lo()) + RealInterval(two_k1));
  r = r * exp(expo * log_n(p.N));
  return r.hi();
}

ComplexRect zeta_em(const ComplexRect& s, const EMParams& p) {
  if (s.contains(1.0, 0.0)) throw Error(Errc::kPoleProximity, "zeta_em: rectangle " + s.str() + " contains the pole s=1");
  ComplexRect ns;
  ComplexRect reg = em_regular(s, p, &ns);
  ComplexRect s1 = s - ComplexRect(1.0, 0.0);
  if (s1.contains_zero()) throw Error(Errc::kPoleProximity, "zeta_em: too close to the pole");
  // N^{1-s}/(s-1)
  ComplexRect pole = (RealInterval(static_cast<double>(p.N)) * ns) / s1;
  return reg + pole;
}

ComplexRect s1_zeta(const ComplexRect& s, const EMParams& p) {
  ComplexRect ns;
  ComplexRect reg = em_regular(s, p, &ns);
  ComplexRect s1 = s - ComplexRect(1.0, 0.0);
  return s1 * reg + RealInterval(static_cast<double>(p.N)) * ns;
}

ComplexRect f_zeta(const ComplexRect& s, const EMParams& p) {
  if (s.contains_zero()) throw Error(Errc::kDomainViolation, "f_zeta: rectangle contains 0");
  return s1_zeta(s, p) / s;
}

ParamChoice auto_params(const ComplexRect& s, double target_width) {
  if (!(target_width > 0.0)) throw Error(Errc::kDomainViolation, "auto_params needs target_width > 0");
  require_right_half(s);
  const double sigma = s.re.lo();
  const double tmax = s.im.mag();
  const double goal = std::log(target_width / 4.0);
  // Floating estimate of log|R| for each K, then a rigorous check.
  double logabs[62];
  for (int j = 0; j < 62; ++j) logabs[j] = 0.5 * std::log((sigma + j) * (sigma + j) + tmax * tmax);
  double base[31];
  double prefix = 0.0;
  int next = 0;
  for (int k = 1; k <= 30; ++k) {
    while (next <= 2 * k) prefix += logabs[next++];
    base[k] = logabs[2 * k + 1] - std::log(sigma + 2 * k + 1) + std::log(std::fabs(kBernoulliScaled[k][1])) + prefix;
  }
  static const int kNs[] = {4,   6,   8,   10,  12,  16,   20,   24,   32,   40,   48,   64,    80,   96,
                            128, 160, 192, 256, 384, 512, 768, 1024, 2048, 4096, 8192, 16384};
  ParamChoice best;
  best.reachable = false;
  double best_est = HUGE_VAL;
  for (int n : kNs) {
    const double ln = std::log(static_cast<double>(n));
    for (int k = 1; k <= 30; ++k) {
      double est = base[k] - (sigma + 2 * k + 1) * ln;
      if (est < best_est) {
        best_est = est;
        best.params = {n, k};
      }
      if (est < goal - 0.5) {
        EMParams p{n, k};
        double r = em_remainder_bound(s, p);
        if (r < target_width / 4.0) return {p, r, true};
      }
    }
  }
  best.remainder = em_remainder_bound(s, best.params);
  best.reachable = best.remainder < target_width / 4.0;
  return best;
}

ComplexRect zeta_em(const ComplexRect& s, double target_width) {
  return zeta_em(s, auto_params(s, target_width).params);
}

ComplexRect f_zeta(const ComplexRect& s, double target_width) {
  return f_zeta(s, auto_params(s, target_width).params);
}

namespace {

struct Jet {
  ComplexRect v;
  ComplexRect d;
};

Jet jet_mul(const Jet& a, const Jet& b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }

// psi(h) = (N^{-h} - 1)/h and psi'(h), entire, by Taylor series in z = -h log N.
Jet psi_jet(const ComplexRect& h, int n) {
  const RealInterval ln = log_n(n);
  const ComplexRect z = -(ln * h);
  const int terms = 30;
  // phi1(z) = sum z^j/(j+1)!, phi1'(z) = sum j z^{j-1}/(j+1)!
  ComplexRect phi(0.0, 0.0), dphi(0.0, 0.0);
  for (int j = terms - 1; j >= 0; --j) {
    RealInterval c = RealInterval(1.0);
    for (int k = 2; k <= j + 1; ++k) c = c / RealInterval(static_cast<double>(k));
    phi = phi * z + ComplexRect(c);
    if (j >= 1) dphi = dphi * z + ComplexRect(RealInterval(j) * c);
  }
  double az = cx_abs(z).hi();
  if (!(az < terms / 2.0)) throw Error(Errc::kDomainViolation, "psi series outside its range");
  RealInterval term(1.0);
  for (int k = 2; k <= terms + 1; ++k) term = term / RealInterval(static_cast<double>(k));
  RealInterval tail = term * pow_real(RealInterval(az), terms) / (RealInterval(1.0) - RealInterval(az) / RealInterval(terms));
  RealInterval dtail = RealInterval(terms) * term * pow_real(RealInterval(az), terms - 1) /
                       (RealInterval(1.0) - RealInterval(az) / RealInterval(terms));
  phi = inflate(phi, tail.hi());
  dphi = inflate(dphi, dtail.hi());
  return {-(ln * phi), sqr(ln) * dphi};
}

}  // namespace

// q(h) = ((s-1)zeta(s) - 1)/h with s = 1 + h equals B(s) + psi(h), where B is
// the regular Euler-Maclaurin part. Returns q and q' over the rectangle.
std::pair<ComplexRect, ComplexRect> pole_quotient(const ComplexRect& h, const EMParams& p, double cauchy_r) {
  validate(p);
  const ComplexRect s = h + ComplexRect(1.0, 0.0);
  require_right_half(s);
  Jet acc{ComplexRect(1.0, 0.0), ComplexRect(0.0, 0.0)};
  for (int n = 2; n < p.N; ++n) {
    ComplexRect e = npow(n, s);
    acc.v = acc.v + e;
    acc.d = acc.d - log_n(n) * e;
  }
  const RealInterval lnn = log_n(p.N);
  ComplexRect ns = npow(p.N, s);
  acc.v = acc.v + RealInterval(0.5) * ns;
  acc.d = acc.d - RealInterval(0.5) * lnn * ns;
  const RealInterval inv_n = RealInterval(1.0) / RealInterval(static_cast<double>(p.N));
  Jet poch{s, ComplexRect(1.0, 0.0)};
  ComplexRect npow_k = inv_n * ns;
  for (int k = 1; k <= p.K; ++k) {
    Jet e{npow_k, -(lnn * npow_k)};
    Jet t = jet_mul(poch, e);
    acc.v = acc.v + bernoulli_scaled(k) * t.v;
    acc.d = acc.d + bernoulli_scaled(k) * t.d;
    if (k < p.K) {
      double j = 2.0 * k - 1.0;
      poch = jet_mul(poch, Jet{s + ComplexRect(j, 0.0), ComplexRect(1.0, 0.0)});
      poch = jet_mul(poch, Jet{s + ComplexRect(j + 1.0, 0.0), ComplexRect(1.0, 0.0)});
      npow_k = sqr(inv_n) * npow_k;
    }
  }
  // Remainder: |R| on s, |R'| by Cauchy on disks of radius r around s.
  acc.v = inflate(acc.v, em_remainder_bound(s, p));
  ComplexRect big = inflate(s, cauchy_r);
  RealInterval dr = RealInterval(em_remainder_bound(big, p)) / RealInterval(cauchy_r);
  acc.d = inflate(acc.d, dr.hi());
  Jet ps = psi_jet(h, p.N);
  return {acc.v + ps.v, acc.d + ps.d};
}

PoleLemma compute_pole_lemma(double delta, int grid) {
  PoleLemma out;
  out.delta = delta;
  double m0 = 0.0, re_q = -HUGE_VAL, dq = HUGE_VAL;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < 2 * grid; ++j) {
      RealInterval x(delta * i / grid, delta * (i + 1) / grid);
      RealInterval y(-delta + delta * j / grid, -delta + delta * (j + 1) / grid);
      ComplexRect h(x, y);
      EMParams p = auto_params(h + ComplexRect(1.0, 0.0), 1e-13).params;
      auto [q, dqv] = pole_quotient(h, p, 0.25);
      m0 = std::max(m0, cx_abs(q).hi());
      re_q = std::max(re_q, q.re.hi());
      dq = std::min(dq, dqv.re.lo());
    }
  }
  out.m0 = m0;
  out.re_q = re_q;
  out.dq = dq;
  // |f|^2 <= 1 iff 2x(1 - Re q) + 2y Im q + |h|^2 (1 - |q|^2) >= 0, and
  // Im q(x+iy) = y * mean Re q' along the vertical segment.
  RealInterval slack = RealInterval(1.0) - sqr(RealInterval(m0)) + RealInterval(2.0) * RealInterval(std::min(0.0, dq));
  out.holds = re_q < 1.0 && slack.lo() >= 0.0;
  return out;
}

const PoleLemma& pole_lemma() {
  static const PoleLemma lemma = compute_pole_lemma(1.0 / 16.0, 8);
  return lemma;
}

bool pole_lemma_covers(const ComplexRect& s) {
  const PoleLemma& l = pole_lemma();
  if (!l.holds) return false;
  return s.re.lo() >= 1.0 && s.re.hi() <= 1.0 + l.delta && s.im.lo() >= -l.delta && s.im.hi() <= l.delta;
}

}  // namespace plc
