// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plcert/gexpr.hpp"
#include "plcert/interval.hpp"
#include "plcert/real.hpp"
#include "plcert/tail.hpp"

namespace plc {

struct Box {
  RealInterval sigma;
  RealInterval t;
  ComplexRect s() const { return {sigma, t}; }
  std::string str() const;
};

enum class Mode { kFullRegion, kBoundaryOnly };
enum class Direction { kIncreasing, kDecreasing };
enum class FactKind { kVerified, kConditional, kCounterBox, kBudgetExhausted };

const char* fact_kind_name(FactKind k);

struct Fact {
  FactKind kind = FactKind::kBudgetExhausted;
  std::string check;
  std::string claim;
  std::string method;
  double margin = 0.0;
  std::size_t boxes = 0;
  std::optional<Box> counter;
  RealInterval counter_value;
  double t_max = 0.0;
  bool t_symmetric = false;
  std::vector<std::string> notes;

  bool ok() const { return kind == FactKind::kVerified || kind == FactKind::kConditional; }
  // Stable content hash (hex) of check, claim and verdict.
  std::string id() const;
};

using AbsFn = std::function<RealInterval(const Box&)>;

struct Target {
  std::string name;
  AbsFn abs;
  bool holomorphic = true;
  bool conj_symmetric = true;
  // |f_zeta| <= 1 near s = 1 from the Cauchy-estimate lemma.
  bool pole_lemma = false;
};

Target f_zeta_target(double width = 1e-9);
Target zeta_target(double width = 1e-9);
Target gexpr_target(const GExpr& g);

struct VerifyOptions {
  std::size_t budget = 1000000;
  int threads = 0;
  std::function<void(const std::string&)> events;
};

struct RegionCheck {
  Target target;
  Box region;
  RealInterval bound;
  Mode mode = Mode::kFullRegion;
  std::size_t budget = 1000000;
};

// sup |target| <= bound over the region (or its boundary).
Fact verify_sup(const RegionCheck& rc, const VerifyOptions& opt = {});
// inf |target| >= bound over the region.
Fact verify_inf(const RegionCheck& rc, const VerifyOptions& opt = {});

struct MonotoneOptions {
  double T0 = 0.0;
  double T_cap = 100.0;
  std::optional<double> T_max;  // conditional fallback when no tail lemma applies
};

Fact verify_monotone_sigma(const GExpr& g, const Real& a, const Real& b, Direction dir, const MonotoneOptions& mo,
                           const VerifyOptions& opt = {});

Fact verify_nonvanishing(const GExpr& g, const Real& a, const Real& b, double T_cap, std::optional<double> T_max,
                         const VerifyOptions& opt = {});

struct PowerFactor {
  std::string name;
  GExpr g;
  RealInterval alpha;
  RealInterval beta;
};

// alpha (b - sigma)/(b - a) + beta (sigma - a)/(b - a)
RealInterval exponent_at(const RealInterval& alpha, const RealInterval& beta, const Real& a, const Real& b,
                         const RealInterval& sigma);

// sup |f| < prod_i (min_sigma |G_i|)^{e_i(sigma)} on [a,b] x [0,T0], first
// uniformly, then on sigma slices.
Fact verify_small_t(const Target& f, const std::vector<PowerFactor>& factors, const Real& a, const Real& b, double T0,
                    const VerifyOptions& opt = {});

// |f(x+it)| <= prod_i |G_i(x+it)|^{e_i(x)} for t in [t_lo, t_hi].
Fact verify_line(const Target& f, const std::vector<PowerFactor>& factors, const Real& a, const Real& b, const Real& x,
                 double t_lo, double t_hi, const VerifyOptions& opt = {});

// phi(log t) <= |G(x+it)| for all t >= t_from (finite part plus tail lemma).
Fact verify_classical_le(const GExpr& g, const Shape& sh, const Real& x, double t_from, double T_cap,
                         const VerifyOptions& opt = {});

// |(s-1)/s| <= 1 on the line re(s) = x.
Fact verify_pole_factor_le_one(const Real& x);

// ---- tail envelopes ---------------------------------------------------------

enum class TailKind { kLinearRatio, kSymLogRatio, kSymLogMonotone };

struct TailEnvelope {
  TailKind kind = TailKind::kSymLogRatio;
  Shape shape;
  Real shift;  // linear_ratio: |shift + s|/t
  Real a, b;
  bool with_pole = false;  // multiply by |s/(s-1)|
  double T_cap = 100.0;
};

// For ratio kinds: [witnessed lower, certified upper] of the sup over
// sigma in [a,b], t >= t0. For the monotone kind: min over sigma of the
// bracket lower bound (positive means the lemma holds).
RealInterval tail_envelope_eval(const TailEnvelope& env, double t0);

// ---- maximization -----------------------------------------------------------

struct SupResult {
  double upper = 0.0;  // certified
  double lower = 0.0;  // witnessed at a point
  Box argmax;
  std::size_t boxes = 0;
  bool converged = false;
};

// Best-first branch and bound for sup f over the region.
SupResult bound_sup(const AbsFn& f, const AbsFn& point_f, const Box& region, double abs_tol, std::size_t budget);

std::size_t default_budget();

}  // namespace plc
