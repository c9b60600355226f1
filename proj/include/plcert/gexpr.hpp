// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plcert/interval.hpp"
#include "plcert/real.hpp"

namespace plc {

enum class Op { kConst, kVar, kAffine, kLog, kExp, kPow, kSum, kProduct, kQuotient, kScale };

inline constexpr std::size_t kMaxNodes = 64;

// Immutable expression tree in the variable s. Handles share nodes.
class GExpr {
 public:
  GExpr() = default;

  static GExpr constant(Real c);
  static GExpr var();
  // q + s (sign = +1) or q - s (sign = -1)
  static GExpr affine(Real q, int sign);
  static GExpr log(GExpr u);
  static GExpr exp(GExpr u);
  static GExpr pow(GExpr u, Real p);
  static GExpr sum(std::vector<GExpr> kids);
  static GExpr product(std::vector<GExpr> kids);
  static GExpr quotient(GExpr num, GExpr den);
  static GExpr scale(Real c, GExpr u);

  explicit operator bool() const { return node_ != nullptr; }
  Op op() const;
  // Constant value, affine shift, power or scale factor depending on op().
  const Real& value() const;
  int sign() const;
  const std::vector<GExpr>& kids() const;
  std::size_t size() const;

  struct Node;

 private:
  explicit GExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Enclosure of G over the rectangle s. Errors carry the offending subtree
// path ("/0/1") in Error::path().
ComplexRect eval(const GExpr& g, const ComplexRect& s);
// Enclosure of |G| from the structure, intersected with |eval|.
RealInterval abs_eval(const GExpr& g, const ComplexRect& s);
GExpr deriv(const GExpr& g);

// Prefix s-expression form, e.g. (scale 1/2 (sum (log (affine e +)) (log (affine e+2 -)))).
std::string to_string(const GExpr& g);
GExpr parse_gexpr(std::string_view text);
// Order-insensitive form for sums and products, constants in exact form.
std::string canonical(const GExpr& g);

// Image of G under s -> 2c - s.
GExpr reflect(const GExpr& g, const Real& c);
// A center c with |G(2c - conj s)| = |G(s)| proven structurally, if any.
std::optional<Real> symmetry_center(const GExpr& g);

// ---- catalog ----------------------------------------------------------------

// Recognized closed forms. SymLog forms are phi(S) with
// S = (log(Q1+s) + log(Q2-s))/2 and phi one of
//   affine:  m*z + d
//   quotlog: c*z/log z
//   pow:     c*z^p
struct Shape {
  enum class Kind { kConst, kLinear, kLog, kLogLog, kSymLog };
  enum class Phi { kAffine, kQuotLog, kPow };
  Kind kind = Kind::kConst;
  Phi phi = Phi::kAffine;
  Real q1, q2;
  int sign = 1;
  Real m{1}, d{0}, c{1}, p{1};
};

std::optional<Shape> classify(const GExpr& g);
// phi applied to a real interval (the classical counterpart phi(log t)).
RealInterval shape_phi(const Shape& sh, const RealInterval& z);
std::string shape_phi_text(const Shape& sh, const std::string& arg);

struct Strip {
  Real a;
  Real b;
};

struct CatalogEntry {
  std::string name;
  std::vector<Real> params;
  GExpr expr;
};

// Names: E, Const, Linear, LinearReflected, Log, LogLog, SymLog, SymLogAffine,
// SymLogQuotLog, SymLogPow, Ex1.G1 .. Ex1.G5, Ex2.G, Ex3.G.
// Throws BadBuilderParams when the parameters violate the builder's strip
// preconditions.
CatalogEntry build_catalog(const std::string& name, const std::vector<Real>& params, const Strip& strip);
std::vector<std::string> catalog_names();

}  // namespace plc
