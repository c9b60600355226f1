// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plcert/gexpr.hpp"
#include "plcert/real.hpp"
#include "plcert/verifier.hpp"

namespace plc {

inline constexpr const char* kSchemaVersion = "plc-1";

struct Factor {
  std::string name;
  GExpr g;
  Real alpha;
  Real beta;
  // Set by normalize_exponents: f is multiplied by G^shift.
  Real shift{0};
  // Upper growth condition for this G, needed for negative exponents.
  std::optional<std::string> upper_growth;
  // Classical counterpart shown in rendered bounds, e.g. "log t".
  std::string display;
};

struct GrowthAttestation {
  Real C1{1};
  Real C2{1};
  Real C3{1};
  std::string statement;
};

// phi(log t) <= |G_factor(x+it)| for t >= t_from.
struct Comparison {
  std::size_t factor = 0;
  double t_from = 3.0;
};

struct BoundaryLine {
  std::string attested;  // the literature bound used on this line
  std::string citation;
  bool pole_factor = false;  // |(s-1)/s| <= 1 converts a zeta bound into an f bound
  double verify_to = 0.0;    // |f| <= prod |G_i|^e_i checked directly on [0, verify_to]
  std::vector<Comparison> comparisons;
};

struct StripHypotheses {
  std::string label;
  Real a;
  Real b{1};
  std::string f = "f_zeta";  // f_zeta or zeta
  std::vector<Factor> factors;
  double T0 = 0.0;
  double T_cap = 100.0;
  std::optional<double> T_max;
  GrowthAttestation growth;
  BoundaryLine at_a;
  BoundaryLine at_b;
  std::vector<std::string> attestations;
  std::size_t budget = 1000000;
  bool normalized = false;
};

enum class Status { kCertified, kConditional, kRefuted, kInconclusive };

const char* status_name(Status s);

struct Certificate {
  std::string schema = kSchemaVersion;
  StripHypotheses hyp;
  std::vector<Fact> facts;
  std::vector<std::string> attestations;
  Status status = Status::kInconclusive;
  std::string conclusion;
  std::string toolchain;
};

// Shifts exponents by -min(alpha, beta) per factor. Throws
// MissingGrowthAttestation when a negative exponent lacks the upper growth
// attestation.
StripHypotheses normalize_exponents(const StripHypotheses& h);

// Throws SchemaError when the hypotheses are malformed.
void validate_hypotheses(const StripHypotheses& h);

struct CertifyOptions {
  VerifyOptions verify;
  // Monotonicity and nonvanishing are checked on this superset strip when set.
  std::optional<std::pair<Real, Real>> fact_strip;
  // Facts established by the caller, folded into the status.
  std::vector<Fact> extra_facts;
};

Certificate certify_strip(const StripHypotheses& h, const CertifyOptions& opt = {});

Target make_target(const std::string& f);

// Exponent alpha (b-sigma)/(b-a) + beta (sigma-a)/(b-a) as c0 + c1 sigma with
// exact rationals, when all inputs are rational.
std::optional<std::pair<Rational, Rational>> exponent_affine(const Real& alpha, const Real& beta, const Real& a,
                                                             const Real& b);
std::string exponent_text(const Real& alpha, const Real& beta, const Real& a, const Real& b);

// Upper enclosure of the interpolated product with the original exponents.
// Throws StatusNotCertified unless the certificate is certified or conditional.
RealInterval bound_at(const Certificate& c, const RealInterval& sigma, const RealInterval& t);

// ---- constants ----------------------------------------------------------------

struct RatioPart {
  enum class Kind { kPole, kLinear, kSymLog };
  Kind kind = Kind::kSymLog;
  Shape shape;      // kSymLog: |G| / phi(log t)
  Real shift;       // kLinear: |shift + s| / t
  Real alpha{1};    // exponent at sigma = a
  Real beta{1};     // exponent at sigma = b
  std::string label;
};

struct RatioSpec {
  std::string label;
  Real a;
  Real b{1};
  std::vector<RatioPart> parts;
  std::string denominator;
};

struct ConstantResult {
  RealInterval value;  // [witnessed, certified upper]
  bool converged = false;
  bool ge_one = false;
  std::size_t boxes = 0;
  double sigma_at = 0.0;
};

// sup over sigma in [a,b], t >= t0 of the ratio.
ConstantResult extract_constant(const Certificate& c, const RatioSpec& spec, double t0, std::size_t budget = 200000);
ConstantResult ratio_sup(const RatioSpec& spec, double t0, std::size_t budget = 200000);

struct RenderedBound {
  std::string text;
  double factor_upper = 0.0;
  double t0 = 0.0;
  std::vector<std::pair<std::string, std::string>> exponents;  // factor name, exponent text
};

RenderedBound final_inequality(const Certificate& c, const RatioSpec& spec, double t0);

std::string toolchain_fingerprint();

}  // namespace plc
