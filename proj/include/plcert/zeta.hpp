// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "plcert/interval.hpp"

namespace plc {

struct EMParams {
  int N = 16;
  int K = 8;
};

struct ParamChoice {
  EMParams params;
  double remainder = 0.0;  // rigorous upper bound on |R|
  bool reachable = true;
};

// Upper bound on the Euler-Maclaurin remainder over the rectangle.
double em_remainder_bound(const ComplexRect& s, const EMParams& p);

// Enclosure of zeta over s. Needs re(s) > 0 and 1 outside s.
ComplexRect zeta_em(const ComplexRect& s, const EMParams& p);
// ((s-1)/s) zeta(s); defined on re(s) > 0 including s = 1.
ComplexRect f_zeta(const ComplexRect& s, const EMParams& p);
// (s-1) zeta(s), entire; evaluated here for re(s) > 0.
ComplexRect s1_zeta(const ComplexRect& s, const EMParams& p);

ParamChoice auto_params(const ComplexRect& s, double target_width);

// Convenience overloads that pick parameters with auto_params.
ComplexRect zeta_em(const ComplexRect& s, double target_width = 1e-10);
ComplexRect f_zeta(const ComplexRect& s, double target_width = 1e-10);

// Near s = 1, |f_zeta| touches 1. With h = s - 1 and
// q(h) = ((s-1)zeta(s) - 1)/h, |f_zeta|^2 <= 1 is equivalent to
//   2x(1 - Re q) + 2y Im q + |h|^2 (1 - |q|^2) >= 0,   h = x + iy,
// and Im q = y * (mean of Re q' on [x, x+iy]). So Re q < 1 and
// 1 - sup|q|^2 + 2 min(0, inf Re q') >= 0 on [0,delta] x [-delta,delta] give
// |f_zeta| <= 1 on [1, 1+delta] x [-delta, delta].
struct PoleLemma {
  double delta = 0.0;
  double m0 = 0.0;    // sup |q|
  double re_q = 0.0;  // sup Re q
  double dq = 0.0;    // inf Re q'
  bool holds = false;
};
// q and q' over h, with the remainder derivative bounded by Cauchy on radius r.
std::pair<ComplexRect, ComplexRect> pole_quotient(const ComplexRect& h, const EMParams& p, double cauchy_r);
PoleLemma compute_pole_lemma(double delta, int grid);
// Cached lemma with delta = 1/16.
const PoleLemma& pole_lemma();
// True when the lemma holds and covers the rectangle.
bool pole_lemma_covers(const ComplexRect& s);

}  // namespace plc
