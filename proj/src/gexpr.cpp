// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcert/gexpr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace plc {

struct GExpr::Node {
  Op op;
  Real value;
  int sign = 1;
  std::vector<GExpr> kids;
  std::size_t size = 1;
};

namespace {

const char* op_name(Op op) {
  switch (op) {
    case Op::kConst: return "const";
    case Op::kVar: return "s";
    case Op::kAffine: return "affine";
    case Op::kLog: return "log";
    case Op::kExp: return "exp";
    case Op::kPow: return "pow";
    case Op::kSum: return "sum";
    case Op::kProduct: return "prod";
    case Op::kQuotient: return "quot";
    case Op::kScale: return "scale";
  }
  return "?";
}

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::kBadBuilderParams, what);
}

}  // namespace

Op GExpr::op() const { return node_->op; }
const Real& GExpr::value() const { return node_->value; }
int GExpr::sign() const { return node_->sign; }
const std::vector<GExpr>& GExpr::kids() const { return node_->kids; }
std::size_t GExpr::size() const { return node_ ? node_->size : 0; }

namespace {

std::shared_ptr<GExpr::Node> make_node(Op op, std::vector<GExpr> kids) {
  auto n = std::make_shared<GExpr::Node>();
  n->op = op;
  for (const auto& k : kids) {
    need(static_cast<bool>(k), "null child expression");
    n->size += k.size();
  }
  n->kids = std::move(kids);
  return n;
}

}  // namespace

GExpr GExpr::constant(Real c) {
  auto n = make_node(Op::kConst, {});
  n->value = std::move(c);
  return GExpr(n);
}

GExpr GExpr::var() { return GExpr(make_node(Op::kVar, {})); }

GExpr GExpr::affine(Real q, int sign) {
  need(sign == 1 || sign == -1, "affine sign must be + or -");
  auto n = make_node(Op::kAffine, {});
  n->value = std::move(q);
  n->sign = sign;
  return GExpr(n);
}

GExpr GExpr::log(GExpr u) { return GExpr(make_node(Op::kLog, {std::move(u)})); }
GExpr GExpr::exp(GExpr u) { return GExpr(make_node(Op::kExp, {std::move(u)})); }

GExpr GExpr::pow(GExpr u, Real p) {
  auto n = make_node(Op::kPow, {std::move(u)});
  n->value = std::move(p);
  return GExpr(n);
}

GExpr GExpr::sum(std::vector<GExpr> kids) {
  need(!kids.empty(), "empty sum");
  return GExpr(make_node(Op::kSum, std::move(kids)));
}

GExpr GExpr::product(std::vector<GExpr> kids) {
  need(!kids.empty(), "empty product");
  return GExpr(make_node(Op::kProduct, std::move(kids)));
}

GExpr GExpr::quotient(GExpr num, GExpr den) {
  return GExpr(make_node(Op::kQuotient, {std::move(num), std::move(den)}));
}

GExpr GExpr::scale(Real c, GExpr u) {
  auto n = make_node(Op::kScale, {std::move(u)});
  n->value = std::move(c);
  return GExpr(n);
}

// ---- evaluation -------------------------------------------------------------

namespace {

ComplexRect eval_at(const GExpr& g, const ComplexRect& s, std::string& path);

ComplexRect eval_kid(const GExpr& g, std::size_t i, const ComplexRect& s, std::string& path) {
  std::size_t mark = path.size();
  path += "/" + std::to_string(i);
  ComplexRect r = eval_at(g.kids()[i], s, path);
  path.resize(mark);
  return r;
}

bool is_small_integer(const Real& p, long& n) {
  auto q = p.rational();
  if (!q || q->den() != 1 || q->num() < -64 || q->num() > 64) return false;
  n = static_cast<long>(q->num());
  return true;
}

ComplexRect cx_powi(const ComplexRect& z, long n) {
  if (n == 0) return ComplexRect(1.0, 0.0);
  long k = n < 0 ? -n : n;
  ComplexRect acc(1.0, 0.0), base = z;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = cx_sqr(base);
  }
  return n < 0 ? ComplexRect(1.0, 0.0) / acc : acc;
}

ComplexRect eval_at(const GExpr& g, const ComplexRect& s, std::string& path) {
  try {
    switch (g.op()) {
      case Op::kConst: return ComplexRect(g.value().value());
      case Op::kVar: return s;
      case Op::kAffine: {
        ComplexRect q(g.value().value());
        return g.sign() > 0 ? q + s : q - s;
      }
      case Op::kLog: return cx_log(eval_kid(g, 0, s, path));
      case Op::kExp: return cx_exp(eval_kid(g, 0, s, path));
      case Op::kPow: {
        ComplexRect u = eval_kid(g, 0, s, path);
        long n;
        if (is_small_integer(g.value(), n)) return cx_powi(u, n);
        return cx_pow_real(u, g.value().value());
      }
      case Op::kSum: {
        ComplexRect acc = eval_kid(g, 0, s, path);
        for (std::size_t i = 1; i < g.kids().size(); ++i) acc = acc + eval_kid(g, i, s, path);
        return acc;
      }
      case Op::kProduct: {
        ComplexRect acc = eval_kid(g, 0, s, path);
        for (std::size_t i = 1; i < g.kids().size(); ++i) acc = acc * eval_kid(g, i, s, path);
        return acc;
      }
      case Op::kQuotient: return eval_kid(g, 0, s, path) / eval_kid(g, 1, s, path);
      case Op::kScale: return g.value().value() * eval_kid(g, 0, s, path);
    }
  } catch (const Error& e) {
    if (!e.path().empty()) throw;
    throw Error(e.code(), std::string(e.what()) + " in subtree " + (path.empty() ? "/" : path),
                path.empty() ? "/" : path);
  }
  throw Error(Errc::kInternal, "unknown node");
}

RealInterval abs_struct(const GExpr& g, const ComplexRect& s) {
  switch (g.op()) {
    case Op::kConst: return abs(g.value().value());
    case Op::kVar: return cx_abs(s);
    case Op::kProduct: {
      RealInterval acc = abs_struct(g.kids()[0], s);
      for (std::size_t i = 1; i < g.kids().size(); ++i) acc = acc * abs_struct(g.kids()[i], s);
      return acc;
    }
    case Op::kQuotient: return abs_struct(g.kids()[0], s) / abs_struct(g.kids()[1], s);
    case Op::kPow: {
      RealInterval b = abs_struct(g.kids()[0], s);
      return pow(b, g.value().value());
    }
    case Op::kScale: return abs(g.value().value()) * abs_struct(g.kids()[0], s);
    case Op::kExp: return exp(eval(g.kids()[0], s).re);
    default: return cx_abs(eval(g, s));
  }
}

}  // namespace

ComplexRect eval(const GExpr& g, const ComplexRect& s) {
  std::string path;
  return eval_at(g, s, path);
}

RealInterval abs_eval(const GExpr& g, const ComplexRect& s) {
  RealInterval direct = cx_abs(eval(g, s));
  RealInterval structural = abs_struct(g, s);
  double lo = std::max(direct.lo(), structural.lo());
  double hi = std::min(direct.hi(), structural.hi());
  if (lo > hi) throw Error(Errc::kInternal, "disjoint modulus enclosures");
  return {lo, hi};
}

GExpr deriv(const GExpr& g) {
  switch (g.op()) {
    case Op::kConst: return GExpr::constant(Real(0));
    case Op::kVar: return GExpr::constant(Real(1));
    case Op::kAffine: return GExpr::constant(Real(g.sign()));
    case Op::kLog: return GExpr::quotient(deriv(g.kids()[0]), g.kids()[0]);
    case Op::kExp: return GExpr::product({deriv(g.kids()[0]), g});
    case Op::kPow: {
      const Real& p = g.value();
      return GExpr::product({GExpr::scale(p, GExpr::pow(g.kids()[0], p - Real(1))), deriv(g.kids()[0])});
    }
    case Op::kSum: {
      std::vector<GExpr> terms;
      for (const auto& k : g.kids()) terms.push_back(deriv(k));
      return GExpr::sum(std::move(terms));
    }
    case Op::kProduct: {
      std::vector<GExpr> terms;
      for (std::size_t i = 0; i < g.kids().size(); ++i) {
        std::vector<GExpr> f = g.kids();
        f[i] = deriv(f[i]);
        terms.push_back(GExpr::product(std::move(f)));
      }
      return terms.size() == 1 ? terms[0] : GExpr::sum(std::move(terms));
    }
    case Op::kQuotient: {
      const GExpr& u = g.kids()[0];
      const GExpr& v = g.kids()[1];
      GExpr num = GExpr::sum({GExpr::product({deriv(u), v}), GExpr::scale(Real(-1), GExpr::product({u, deriv(v)}))});
      return GExpr::quotient(num, GExpr::product({v, v}));
    }
    case Op::kScale: return GExpr::scale(g.value(), deriv(g.kids()[0]));
  }
  throw Error(Errc::kInternal, "unknown node");
}

// ---- text form --------------------------------------------------------------

namespace {

void print(const GExpr& g, std::string& out, bool canon) {
  auto real = [&](const Real& r) { return canon ? r.canonical() : r.text(); };
  switch (g.op()) {
    case Op::kVar: out += "s"; return;
    case Op::kConst: out += "(const " + real(g.value()) + ")"; return;
    case Op::kAffine: out += "(affine " + real(g.value()) + (g.sign() > 0 ? " +)" : " -)"); return;
    default: break;
  }
  out += "(";
  out += op_name(g.op());
  if (g.op() == Op::kScale) out += " " + real(g.value());
  std::vector<std::string> parts;
  for (const auto& k : g.kids()) {
    std::string p;
    print(k, p, canon);
    parts.push_back(std::move(p));
  }
  if (canon && (g.op() == Op::kSum || g.op() == Op::kProduct)) std::sort(parts.begin(), parts.end());
  for (const auto& p : parts) out += " " + p;
  if (g.op() == Op::kPow) out += " " + real(g.value());
  out += ")";
}

class SexprParser {
 public:
  explicit SexprParser(std::string_view s) : s_(s) {}

  GExpr run() {
    GExpr g = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    if (g.size() > kMaxNodes) fail("expression has " + std::to_string(g.size()) + " nodes, limit is 64");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::kParseError, "expression: " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string atom() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')')
      ++pos_;
    if (start == pos_) fail("expected token");
    return std::string(s_.substr(start, pos_ - start));
  }

  Real real() {
    std::string a = atom();
    return Real::parse(a);
  }

  void close() {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
    ++pos_;
  }

  bool at_close() {
    skip();
    return pos_ < s_.size() && s_[pos_] == ')';
  }

  GExpr expr() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (s_[pos_] != '(') {
      std::string a = atom();
      if (a == "s") return GExpr::var();
      fail("unexpected atom '" + a + "'");
    }
    ++pos_;
    std::string head = atom();
    GExpr g;
    if (head == "const") {
      g = GExpr::constant(real());
    } else if (head == "affine") {
      Real q = real();
      std::string sg = atom();
      if (sg != "+" && sg != "-") fail("affine sign must be + or -");
      g = GExpr::affine(q, sg == "+" ? 1 : -1);
    } else if (head == "log" || head == "exp") {
      GExpr u = expr();
      g = head == "log" ? GExpr::log(u) : GExpr::exp(u);
    } else if (head == "pow") {
      GExpr u = expr();
      g = GExpr::pow(u, real());
    } else if (head == "sum" || head == "prod") {
      std::vector<GExpr> kids;
      while (!at_close()) kids.push_back(expr());
      if (kids.empty()) fail("empty " + head);
      g = head == "sum" ? GExpr::sum(kids) : GExpr::product(kids);
    } else if (head == "quot") {
      GExpr u = expr();
      GExpr v = expr();
      g = GExpr::quotient(u, v);
    } else if (head == "scale") {
      Real c = real();
      g = GExpr::scale(c, expr());
    } else {
      fail("unknown operator '" + head + "'");
    }
    close();
    return g;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const GExpr& g) {
  std::string out;
  print(g, out, false);
  return out;
}

std::string canonical(const GExpr& g) {
  std::string out;
  print(g, out, true);
  return out;
}

GExpr parse_gexpr(std::string_view text) { return SexprParser(text).run(); }

// ---- symmetry ---------------------------------------------------------------

GExpr reflect(const GExpr& g, const Real& c) {
  Real two_c = Real(2) * c;
  switch (g.op()) {
    case Op::kConst: return g;
    case Op::kVar: return GExpr::affine(two_c, -1);
    case Op::kAffine:
      return g.sign() > 0 ? GExpr::affine(g.value() + two_c, -1) : GExpr::affine(g.value() - two_c, 1);
    default: break;
  }
  std::vector<GExpr> kids;
  for (const auto& k : g.kids()) kids.push_back(reflect(k, c));
  switch (g.op()) {
    case Op::kLog: return GExpr::log(kids[0]);
    case Op::kExp: return GExpr::exp(kids[0]);
    case Op::kPow: return GExpr::pow(kids[0], g.value());
    case Op::kSum: return GExpr::sum(kids);
    case Op::kProduct: return GExpr::product(kids);
    case Op::kQuotient: return GExpr::quotient(kids[0], kids[1]);
    case Op::kScale: return GExpr::scale(g.value(), kids[0]);
    default: break;
  }
  throw Error(Errc::kInternal, "unknown node");
}

std::optional<Real> symmetry_center(const GExpr& g) {
  std::vector<Real> plus, minus;
  std::function<void(const GExpr&)> walk = [&](const GExpr& n) {
    if (n.op() == Op::kAffine) (n.sign() > 0 ? plus : minus).push_back(n.value());
    for (const auto& k : n.kids()) walk(k);
  };
  walk(g);
  std::string base = canonical(g);
  for (const auto& p : plus) {
    for (const auto& m : minus) {
      if (!p.exact() || !m.exact()) continue;
      Real c = (m - p) / Real(2);
      if (!c.exact()) continue;
      if (canonical(reflect(g, c)) == base) return c;
    }
  }
  return std::nullopt;
}

// ---- catalog ----------------------------------------------------------------

namespace {

GExpr log_pair(const Real& q1, const Real& q2) {
  return GExpr::sum({GExpr::log(GExpr::affine(q1, 1)), GExpr::log(GExpr::affine(q2, -1))});
}

std::optional<std::pair<Real, Real>> match_pair(const GExpr& g) {
  if (g.op() != Op::kSum || g.kids().size() != 2) return std::nullopt;
  const GExpr* a = &g.kids()[0];
  const GExpr* b = &g.kids()[1];
  auto is_log_affine = [](const GExpr& n) {
    return n.op() == Op::kLog && n.kids()[0].op() == Op::kAffine;
  };
  if (!is_log_affine(*a) || !is_log_affine(*b)) return std::nullopt;
  if (a->kids()[0].sign() < 0) std::swap(a, b);
  if (a->kids()[0].sign() != 1 || b->kids()[0].sign() != -1) return std::nullopt;
  return std::make_pair(a->kids()[0].value(), b->kids()[0].value());
}

// Matches (scale 1/2 pair) and returns the pair.
std::optional<std::pair<Real, Real>> match_half_pair(const GExpr& g) {
  if (g.op() != Op::kScale) return std::nullopt;
  auto r = g.value().rational();
  if (!r || !(*r == *Rational::make(1, 2))) return std::nullopt;
  return match_pair(g.kids()[0]);
}

bool same_pair(const std::pair<Real, Real>& x, const std::pair<Real, Real>& y) {
  return x.first.same_value(y.first) && x.second.same_value(y.second);
}

Shape symlog(const std::pair<Real, Real>& q, Shape::Phi phi) {
  Shape sh;
  sh.kind = Shape::Kind::kSymLog;
  sh.phi = phi;
  sh.q1 = q.first;
  sh.q2 = q.second;
  return sh;
}

std::optional<Shape> classify_pow(const GExpr& g, const Real& c) {
  if (g.op() != Op::kPow) return std::nullopt;
  auto q = match_half_pair(g.kids()[0]);
  if (!q) return std::nullopt;
  Shape sh = symlog(*q, Shape::Phi::kPow);
  sh.c = c;
  sh.p = g.value();
  return sh;
}

std::optional<Shape> classify_quotlog(const GExpr& g, const Real& c) {
  if (g.op() != Op::kQuotient) return std::nullopt;
  auto q = match_pair(g.kids()[0]);
  const GExpr& den = g.kids()[1];
  if (!q || den.op() != Op::kScale) return std::nullopt;
  auto two = den.value().rational();
  if (!two || !(*two == Rational(2))) return std::nullopt;
  const GExpr& lg = den.kids()[0];
  if (lg.op() != Op::kLog) return std::nullopt;
  auto q2 = match_half_pair(lg.kids()[0]);
  if (!q2 || !same_pair(*q, *q2)) return std::nullopt;
  Shape sh = symlog(*q, Shape::Phi::kQuotLog);
  sh.c = c;
  return sh;
}

}  // namespace

std::optional<Shape> classify(const GExpr& g) {
  switch (g.op()) {
    case Op::kConst: {
      Shape sh;
      sh.kind = Shape::Kind::kConst;
      sh.c = g.value();
      return sh;
    }
    case Op::kVar: {
      Shape sh;
      sh.kind = Shape::Kind::kLinear;
      sh.q1 = Real(0);
      return sh;
    }
    case Op::kAffine: {
      Shape sh;
      sh.kind = Shape::Kind::kLinear;
      sh.q1 = g.value();
      sh.sign = g.sign();
      return sh;
    }
    case Op::kLog: {
      const GExpr& u = g.kids()[0];
      Shape sh;
      if (u.op() == Op::kAffine && u.sign() == 1) {
        sh.kind = Shape::Kind::kLog;
        sh.q1 = u.value();
        return sh;
      }
      if (u.op() == Op::kLog && u.kids()[0].op() == Op::kAffine && u.kids()[0].sign() == 1) {
        sh.kind = Shape::Kind::kLogLog;
        sh.q1 = u.kids()[0].value();
        return sh;
      }
      return std::nullopt;
    }
    case Op::kScale: {
      const GExpr& u = g.kids()[0];
      if (auto q = match_pair(u)) {
        Shape sh = symlog(*q, Shape::Phi::kAffine);
        sh.m = Real(2) * g.value();
        return sh;
      }
      if (auto sh = classify_pow(u, g.value())) return sh;
      if (auto sh = classify_quotlog(u, g.value())) return sh;
      return std::nullopt;
    }
    case Op::kPow: return classify_pow(g, Real(1));
    case Op::kSum: {
      if (g.kids().size() != 2) return std::nullopt;
      const GExpr* a = &g.kids()[0];
      const GExpr* b = &g.kids()[1];
      if (a->op() == Op::kConst) std::swap(a, b);
      if (b->op() != Op::kConst || a->op() != Op::kScale) return std::nullopt;
      auto q = match_pair(a->kids()[0]);
      if (!q) return std::nullopt;
      Shape sh = symlog(*q, Shape::Phi::kAffine);
      sh.m = Real(2) * a->value();
      sh.d = b->value();
      return sh;
    }
    default: return std::nullopt;
  }
}

RealInterval shape_phi(const Shape& sh, const RealInterval& z) {
  switch (sh.phi) {
    case Shape::Phi::kAffine: return sh.m.value() * z + sh.d.value();
    case Shape::Phi::kQuotLog: return sh.c.value() * z / log(z);
    case Shape::Phi::kPow: return sh.c.value() * pow(z, sh.p.value());
  }
  return z;
}

std::string shape_phi_text(const Shape& sh, const std::string& arg) {
  switch (sh.phi) {
    case Shape::Phi::kAffine: {
      std::string s = (sh.m.same_value(Real(1)) ? "" : "(" + sh.m.text() + ")*") + arg;
      if (!sh.d.same_value(Real(0))) s += " + " + sh.d.text();
      return s;
    }
    case Shape::Phi::kQuotLog: return sh.c.text() + "*" + arg + "/log(" + arg + ")";
    case Shape::Phi::kPow: return sh.c.text() + "*(" + arg + ")^(" + sh.p.text() + ")";
  }
  return arg;
}

namespace {

void check_count(const std::vector<Real>& params, std::size_t n, const std::string& name) {
  need(params.size() == n, name + " expects " + std::to_string(n) + " parameters, got " +
                               std::to_string(params.size()));
}

void check_symlog(const Real& q1, const Real& q2, const Strip& strip) {
  RealInterval lhs = q1.value() + strip.a.value();
  RealInterval rhs = q2.value() - strip.b.value();
  need(lhs.lo() >= 1.0, "SymLog requires Q1 + a >= 1 (Q1 = " + q1.text() + ", a = " + strip.a.text() + ")");
  need(rhs.lo() >= 1.0, "SymLog requires Q2 - b >= 1 (Q2 = " + q2.text() + ", b = " + strip.b.text() + ")");
}

GExpr symlog_expr(const Real& q1, const Real& q2) {
  return GExpr::scale(*Rational::make(1, 2), log_pair(q1, q2));
}

GExpr symlog_affine(const Real& q1, const Real& q2, const Real& m, const Real& d) {
  GExpr core = GExpr::scale(m / Real(2), log_pair(q1, q2));
  if (d.same_value(Real(0))) return core;
  return GExpr::sum({core, GExpr::constant(d)});
}

GExpr symlog_quotlog(const Real& q1, const Real& q2, const Real& c) {
  GExpr pair = log_pair(q1, q2);
  return GExpr::scale(c, GExpr::quotient(pair, GExpr::scale(Real(2), GExpr::log(symlog_expr(q1, q2)))));
}

GExpr symlog_pow(const Real& q1, const Real& q2, const Real& c, const Real& p) {
  return GExpr::scale(c, GExpr::pow(symlog_expr(q1, q2), p));
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"E",      "Const",        "Linear",        "LinearReflected", "Log",    "LogLog",
          "SymLog", "SymLogAffine", "SymLogQuotLog", "SymLogPow",       "Ex1.G1", "Ex1.G2",
          "Ex1.G3", "Ex1.G4",       "Ex1.G5",        "Ex2.G",           "Ex3.G"};
}

CatalogEntry build_catalog(const std::string& name, const std::vector<Real>& params, const Strip& strip) {
  CatalogEntry out{name, params, {}};
  const Real e = Real::euler();
  const Real e2 = e + Real(2);
  auto p = [&](std::size_t i) -> const Real& { return params[i]; };
  if (name == "E") {
    check_count(params, 0, name);
    out.expr = GExpr::constant(e);
  } else if (name == "Const") {
    check_count(params, 1, name);
    need(p(0).value().lo() > 0, "Const requires a positive constant");
    out.expr = GExpr::constant(p(0));
  } else if (name == "Linear" || name == "LinearReflected") {
    check_count(params, 1, name);
    if (name == "Linear") {
      need((p(0).value() + strip.a.value()).lo() > 0, "Linear requires Q + a > 0");
      out.expr = GExpr::affine(p(0), 1);
    } else {
      need((p(0).value() - strip.b.value()).lo() > 0, "LinearReflected requires Q - b > 0");
      out.expr = GExpr::affine(p(0), -1);
    }
  } else if (name == "Log") {
    check_count(params, 1, name);
    need((p(0).value() + strip.a.value()).lo() > 0, "Log requires Q + a > 0");
    out.expr = GExpr::log(GExpr::affine(p(0), 1));
  } else if (name == "LogLog") {
    check_count(params, 1, name);
    need((p(0).value() + strip.a.value()).lo() > 1, "LogLog requires Q + a > 1");
    out.expr = GExpr::log(GExpr::log(GExpr::affine(p(0), 1)));
  } else if (name == "SymLog") {
    check_count(params, 2, name);
    check_symlog(p(0), p(1), strip);
    out.expr = symlog_expr(p(0), p(1));
  } else if (name == "SymLogAffine") {
    check_count(params, 4, name);
    check_symlog(p(0), p(1), strip);
    need(p(2).value().lo() > 0, "SymLogAffine requires m > 0");
    out.expr = symlog_affine(p(0), p(1), p(2), p(3));
  } else if (name == "SymLogQuotLog") {
    check_count(params, 3, name);
    check_symlog(p(0), p(1), strip);
    need(p(2).value().lo() > 0, "SymLogQuotLog requires c > 0");
    out.expr = symlog_quotlog(p(0), p(1), p(2));
  } else if (name == "SymLogPow") {
    check_count(params, 4, name);
    check_symlog(p(0), p(1), strip);
    need(p(2).value().lo() > 0 && p(3).value().lo() > 0, "SymLogPow requires c > 0 and p > 0");
    out.expr = symlog_pow(p(0), p(1), p(2), p(3));
  } else if (name.rfind("Ex", 0) == 0) {
    check_count(params, 0, name);
    if (name == "Ex3.G") {
      Real q1 = Real(4) * e;
      Real q2 = q1 + Real(2);
      check_symlog(q1, q2, strip);
      out.expr = symlog_expr(q1, q2);
      return out;
    }
    check_symlog(e, e2, strip);
    if (name == "Ex1.G1" || name == "Ex2.G") out.expr = symlog_expr(e, e2);
    else if (name == "Ex1.G2") out.expr = symlog_affine(e, e2, *Rational::make(1, 2), Real::parse("1.93"));
    else if (name == "Ex1.G3") out.expr = symlog_affine(e, e2, *Rational::make(1, 5), Real::parse("44.02"));
    else if (name == "Ex1.G4") out.expr = symlog_quotlog(e, e2, Real::parse("1.731"));
    else if (name == "Ex1.G5") out.expr = symlog_pow(e, e2, Real::parse("58.096"), *Rational::make(2, 3));
    else throw Error(Errc::kBadBuilderParams, "unknown catalog entry '" + name + "'");
  } else {
    throw Error(Errc::kBadBuilderParams, "unknown catalog entry '" + name + "'");
  }
  return out;
}

}  // namespace plc
