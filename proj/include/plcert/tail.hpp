// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "plcert/gexpr.hpp"
#include "plcert/interval.hpp"

namespace plc {

// Ranges of the tail variables for all t >= T:
// u = 1/t in [0, 1/T], v = 1/log t in [0, 1/log T], lambda = 1/log log t.
struct TailVars {
  double T = 0.0;
  RealInterval u;
  RealInterval v;
  RealInterval lambda;
  static TailVars at(double T);
};

// For S = (log(Q1+s) + log(Q2-s))/2 with s = sigma + it and L = log t:
//   Re S = L + ahat*u^2,  Im S = bhat*u,  delta = sigma - (Q2-Q1)/2.
struct SymLogScaled {
  RealInterval x1, x2;  // (Q1+sigma)u, (Q2-sigma)u
  RealInterval p1, p2;  // 1 + x1^2, 1 + x2^2
  RealInterval ahat;
  RealInterval bhat;
  RealInterval delta;
  RealInterval b1;  // atan(y)/y / (1 + x1 x2), bhat = -delta * b1
};

SymLogScaled symlog_scaled(const Shape& sh, const RealInterval& sigma, const RealInterval& u);

// Lower bound of the bracket K with d|G|/dsigma = delta * u^2 * (positive) * K
// for t >= T; K > 0 proves |G| has the sign of delta. Requires sh.kind == kSymLog.
RealInterval symlog_monotone_bracket(const Shape& sh, const RealInterval& sigma, const TailVars& tv);

// Lower bound of |G(sigma+it)| for t >= T, for every classified shape.
double shape_tail_lower(const Shape& sh, const RealInterval& sigma, const TailVars& tv);

// |phi(S)| / phi(L) enclosure for t >= T.
RealInterval symlog_ratio(const Shape& sh, const RealInterval& sigma, const TailVars& tv);

// Margin m with |phi(S)| >= phi(L) whenever m >= 0, for t >= T.
RealInterval symlog_ratio_ge_one(const Shape& sh, const RealInterval& sigma, const TailVars& tv);

// |s/(s-1)| for t >= T.
RealInterval pole_ratio_tail(const RealInterval& sigma, const TailVars& tv);
// |c + s| / t for t >= T.
RealInterval linear_ratio_tail(const RealInterval& c, const RealInterval& sigma, const TailVars& tv);

}  // namespace plc
