// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcert/jobspec.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "json.hpp"

namespace plc {

using json = nlohmann::ordered_json;

namespace {

const std::set<std::string> kKinds = {"certify",           "constant",          "table",
                                      "reproduce-example1", "reproduce-example2", "reproduce-example3",
                                      "zeta",              "verify-region"};

[[noreturn]] void bad(const std::string& msg, const std::string& path) {
  throw Error(Errc::kSchemaError, msg, path);
}

// Checked access to one JSON object.
class Obj {
 public:
  Obj(const json& j, std::string path, std::set<std::string> allowed) : j_(j), path_(std::move(path)) {
    if (!j.is_object()) bad("expected an object", path_.empty() ? "/" : path_);
    for (const auto& [k, v] : j.items())
      if (!allowed.count(k)) bad("unknown field '" + k + "'", at(k));
  }

  std::string at(const std::string& k) const { return path_ + "/" + k; }
  bool has(const std::string& k) const { return j_.contains(k) && !j_.at(k).is_null(); }
  const json& raw(const std::string& k) const { return j_.at(k); }

  std::string str(const std::string& k, std::string def = {}, bool required = false) const {
    if (!has(k)) {
      if (required) bad("missing field '" + k + "'", at(k));
      return def;
    }
    const json& v = j_.at(k);
    if (v.is_string()) return v.get<std::string>();
    // Mathematical values may be given as plain integers.
    if (v.is_number_integer()) return v.dump();
    bad("expected a string", at(k));
  }

  double num(const std::string& k, double def, bool required = false) const {
    if (!has(k)) {
      if (required) bad("missing field '" + k + "'", at(k));
      return def;
    }
    const json& v = j_.at(k);
    if (!v.is_number()) bad("expected a number", at(k));
    double x = v.get<double>();
    if (!std::isfinite(x)) bad("expected a finite number", at(k));
    return x;
  }

  std::size_t count(const std::string& k, std::size_t def) const {
    if (!has(k)) return def;
    const json& v = j_.at(k);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      bad("expected a non-negative integer", at(k));
    return v.get<std::size_t>();
  }

  bool flag(const std::string& k, bool def) const {
    if (!has(k)) return def;
    if (!j_.at(k).is_boolean()) bad("expected true or false", at(k));
    return j_.at(k).get<bool>();
  }

  const json& arr(const std::string& k) const {
    const json& v = j_.at(k);
    if (!v.is_array()) bad("expected an array", at(k));
    return v;
  }

  std::vector<std::string> strings(const std::string& k) const {
    std::vector<std::string> out;
    if (!has(k)) return out;
    const json& v = arr(k);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_string()) out.push_back(v[i].get<std::string>());
      else if (v[i].is_number_integer()) out.push_back(v[i].dump());
      else bad("expected a string", at(k) + "/" + std::to_string(i));
    }
    return out;
  }

  std::vector<double> numbers(const std::string& k) const {
    std::vector<double> out;
    if (!has(k)) return out;
    const json& v = arr(k);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) bad("expected a number", at(k) + "/" + std::to_string(i));
      out.push_back(v[i].get<double>());
    }
    return out;
  }

 private:
  const json& j_;
  std::string path_;
};

Real real_at(const std::string& text, const std::string& path) {
  try {
    return Real::parse(text);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), path);
  }
}

FactorSpec read_factor(const json& j, const std::string& path) {
  Obj o(j, path, {"name", "catalog", "params", "expr", "alpha", "beta", "display", "upper_growth"});
  FactorSpec f;
  f.name = o.str("name", {}, true);
  f.catalog = o.str("catalog");
  f.params = o.strings("params");
  f.expr = o.str("expr");
  if (f.catalog.empty() == f.expr.empty()) bad("factor needs exactly one of 'catalog' and 'expr'", path);
  if (!f.expr.empty() && !f.params.empty()) bad("'params' only applies to catalog factors", o.at("params"));
  f.alpha = o.str("alpha", "0");
  f.beta = o.str("beta", "0");
  f.display = o.str("display");
  if (o.has("upper_growth")) f.upper_growth = o.str("upper_growth");
  return f;
}

json write_factor(const FactorSpec& f) {
  json j;
  j["name"] = f.name;
  if (!f.catalog.empty()) {
    j["catalog"] = f.catalog;
    j["params"] = f.params;
  } else {
    j["expr"] = f.expr;
  }
  j["alpha"] = f.alpha;
  j["beta"] = f.beta;
  if (!f.display.empty()) j["display"] = f.display;
  if (f.upper_growth) j["upper_growth"] = *f.upper_growth;
  return j;
}

BoundarySpec read_boundary(const json& j, const std::string& path) {
  Obj o(j, path, {"attested", "citation", "pole_factor", "verify_to", "comparisons"});
  BoundarySpec b;
  b.attested = o.str("attested");
  b.citation = o.str("citation");
  b.pole_factor = o.flag("pole_factor", false);
  b.verify_to = o.num("verify_to", 0.0);
  if (b.verify_to < 0) bad("verify_to must be non-negative", o.at("verify_to"));
  if (o.has("comparisons")) {
    const json& a = o.arr("comparisons");
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::string p = o.at("comparisons") + "/" + std::to_string(i);
      Obj c(a[i], p, {"factor", "t_from"});
      ComparisonSpec cs;
      cs.factor = c.count("factor", 0);
      cs.t_from = c.num("t_from", 3.0);
      if (!(cs.t_from >= 3.0)) bad("t_from must be at least 3", c.at("t_from"));
      b.comparisons.push_back(cs);
    }
  }
  return b;
}

json write_boundary(const BoundarySpec& b) {
  json j;
  j["attested"] = b.attested;
  j["citation"] = b.citation;
  j["pole_factor"] = b.pole_factor;
  j["verify_to"] = b.verify_to;
  json cs = json::array();
  for (const auto& c : b.comparisons) cs.push_back(json{{"factor", c.factor}, {"t_from", c.t_from}});
  j["comparisons"] = cs;
  return j;
}

void check_kind_fields(const JobSpec& j, const Obj& o) {
  auto need = [&](bool ok, const std::string& field) {
    if (!ok) bad("kind '" + j.kind + "' requires '" + field + "'", o.at(field));
  };
  bool strip_kind = j.kind == "certify" || j.kind == "constant" || j.kind == "table" ||
                    j.kind == "reproduce-example2" || j.kind == "reproduce-example3";
  if (strip_kind) {
    need(!j.a.empty(), "a");
    need(!j.b.empty(), "b");
    need(!j.factors.empty() || j.kind == "table", "factors");
  }
  if (j.kind == "constant" || j.kind == "table" || j.kind == "reproduce-example2" || j.kind == "reproduce-example3")
    need(j.ratio.has_value(), "ratio");
  if (j.kind == "reproduce-example1") {
    need(!j.family.empty(), "family");
    need(!j.eta.empty(), "eta");
    need(j.ratio.has_value(), "ratio");
  }
  if (j.kind == "zeta") need(j.point.has_value(), "point");
  if (j.kind == "verify-region") need(j.region.has_value(), "region");
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string interval_text(const RealInterval& v) { return "[" + fmt17(v.lo()) + ", " + fmt17(v.hi()) + "]"; }

JobSpec parse_jobspec(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::kParseError, std::string("job spec is not valid JSON: ") + e.what());
  }
  Obj o(root, "",
        {"schema", "kind", "label", "note", "a", "b", "f", "factors", "T0", "T_cap", "T_max", "growth", "boundary",
         "attestations", "ratio", "targets", "eta", "family", "exponent_check", "budget", "constant_budget", "csv",
         "outputs", "point", "region", "alpha", "beta"});
  JobSpec j;
  j.schema = o.str("schema", kSchemaVersion);
  if (j.schema != kSchemaVersion) bad("unsupported schema '" + j.schema + "'", "/schema");
  j.kind = o.str("kind", {}, true);
  if (!kKinds.count(j.kind)) bad("unknown kind '" + j.kind + "'", "/kind");
  j.label = o.str("label");
  j.note = o.str("note");
  j.a = o.str("a");
  j.b = o.str("b");
  j.f = o.str("f", "f_zeta");
  if (j.f != "f_zeta" && j.f != "zeta") bad("f must be \"f_zeta\" or \"zeta\"", "/f");
  if (o.has("factors")) {
    const json& a = o.arr("factors");
    for (std::size_t i = 0; i < a.size(); ++i) j.factors.push_back(read_factor(a[i], "/factors/" + std::to_string(i)));
  }
  // Separate exponent vectors, as an alternative to per-factor fields.
  for (const char* key : {"alpha", "beta"}) {
    if (!o.has(key)) continue;
    auto v = o.strings(key);
    if (v.size() != j.factors.size())
      bad(std::string(key) + " has " + std::to_string(v.size()) + " entries for " + std::to_string(j.factors.size()) +
              " factors",
          std::string("/") + key);
    for (std::size_t i = 0; i < v.size(); ++i) (std::string(key) == "alpha" ? j.factors[i].alpha : j.factors[i].beta) = v[i];
  }
  j.T0 = o.num("T0", 0.0);
  j.T_cap = o.num("T_cap", 100.0);
  if (o.has("T_max")) j.T_max = o.num("T_max", 0.0);
  if (o.has("growth")) {
    Obj g(o.raw("growth"), "/growth", {"C1", "C2", "C3", "statement"});
    j.growth.C1 = g.str("C1", "1");
    j.growth.C2 = g.str("C2", "1");
    j.growth.C3 = g.str("C3", "1");
    j.growth.statement = g.str("statement");
  }
  if (o.has("boundary")) {
    Obj b(o.raw("boundary"), "/boundary", {"a", "b"});
    if (b.has("a")) j.at_a = read_boundary(b.raw("a"), "/boundary/a");
    if (b.has("b")) j.at_b = read_boundary(b.raw("b"), "/boundary/b");
  }
  j.attestations = o.strings("attestations");
  if (o.has("ratio")) {
    Obj r(o.raw("ratio"), "/ratio", {"parts", "denominator"});
    RatioSpecText rt;
    rt.denominator = r.str("denominator");
    if (!r.has("parts")) bad("missing field 'parts'", "/ratio/parts");
    const json& parts = r.arr("parts");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::string p = "/ratio/parts/" + std::to_string(i);
      Obj q(parts[i], p, {"kind", "factor", "shift", "alpha", "beta"});
      RatioPartSpec ps;
      ps.kind = q.str("kind", {}, true);
      if (ps.kind != "pole" && ps.kind != "linear" && ps.kind != "symlog")
        bad("ratio part kind must be pole, linear or symlog", q.at("kind"));
      if (q.has("factor")) ps.factor = q.count("factor", 0);
      if (ps.kind == "symlog" && !ps.factor && j.kind != "reproduce-example1")
        bad("symlog part needs 'factor'", q.at("factor"));
      ps.shift = q.str("shift", "0");
      ps.alpha = q.str("alpha", "1");
      ps.beta = q.str("beta", "1");
      rt.parts.push_back(ps);
    }
    j.ratio = rt;
  }
  if (o.has("targets")) {
    const json& a = o.arr("targets");
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::string p = "/targets/" + std::to_string(i);
      Obj t(a[i], p, {"t0", "bound", "required"});
      TargetSpec ts;
      ts.t0 = t.num("t0", 0.0, true);
      if (!(ts.t0 >= 3.0)) bad("t0 must be at least 3", t.at("t0"));
      ts.bound = t.str("bound");
      ts.required = t.flag("required", true);
      j.targets.push_back(ts);
    }
  }
  j.eta = o.strings("eta");
  if (o.has("family")) {
    const json& a = o.arr("family");
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::string p = "/family/" + std::to_string(i);
      Obj e(a[i], p, {"factor", "T0", "t_from", "literature", "citation"});
      FamilyEntry fe;
      if (!e.has("factor")) bad("missing field 'factor'", e.at("factor"));
      fe.factor = read_factor(e.raw("factor"), e.at("factor"));
      fe.T0 = e.num("T0", 3.0);
      fe.t_from = e.num("t_from", fe.T0);
      fe.literature = e.str("literature");
      fe.citation = e.str("citation");
      j.family.push_back(fe);
    }
  }
  j.exponent_check = o.str("exponent_check");
  j.budget = o.count("budget", 1000000);
  j.constant_budget = o.count("constant_budget", 400000);
  if (o.has("csv")) {
    Obj c(o.raw("csv"), "/csv", {"t", "sigma_steps"});
    j.csv_t = c.numbers("t");
    j.csv_sigma_steps = static_cast<int>(c.count("sigma_steps", 10));
    if (j.csv_sigma_steps < 1) bad("sigma_steps must be positive", "/csv/sigma_steps");
  }
  if (o.has("outputs")) {
    Obj c(o.raw("outputs"), "/outputs", {"certificate", "report", "csv", "events"});
    j.outputs = {c.str("certificate"), c.str("report"), c.str("csv"), c.str("events")};
  }
  if (o.has("point")) {
    Obj c(o.raw("point"), "/point", {"target", "sigma", "t", "width"});
    PointSpec p;
    p.target = c.str("target", "zeta");
    if (p.target != "zeta" && p.target != "f_zeta") bad("target must be zeta or f_zeta", c.at("target"));
    auto s = c.strings("sigma");
    auto t = c.strings("t");
    if (s.size() < 1 || s.size() > 2) bad("sigma must have one or two entries", c.at("sigma"));
    if (t.size() < 1 || t.size() > 2) bad("t must have one or two entries", c.at("t"));
    p.sigma_lo = s[0];
    p.sigma_hi = s.back();
    p.t_lo = t[0];
    p.t_hi = t.back();
    p.width = c.num("width", 1e-12);
    j.point = p;
  }
  if (o.has("region")) {
    Obj c(o.raw("region"), "/region", {"target", "sense", "sigma", "t", "bound", "mode"});
    RegionSpec r;
    r.target = c.str("target", "f_zeta");
    if (r.target != "zeta" && r.target != "f_zeta") bad("target must be zeta or f_zeta", c.at("target"));
    r.sense = c.str("sense", "sup");
    if (r.sense != "sup" && r.sense != "inf") bad("sense must be sup or inf", c.at("sense"));
    auto s = c.strings("sigma");
    auto t = c.strings("t");
    if (s.size() != 2) bad("sigma must be [lo, hi]", c.at("sigma"));
    if (t.size() != 2) bad("t must be [lo, hi]", c.at("t"));
    r.sigma_lo = s[0];
    r.sigma_hi = s[1];
    r.t_lo = t[0];
    r.t_hi = t[1];
    r.bound = c.str("bound", {}, true);
    r.mode = c.str("mode", "boundary");
    if (r.mode != "boundary" && r.mode != "full") bad("mode must be boundary or full", c.at("mode"));
    j.region = r;
  }
  check_kind_fields(j, o);

  // Materialize everything once so that errors surface before any computation.
  if (!j.a.empty() || !j.b.empty()) {
    StripHypotheses h = to_hypotheses(j);
    if (j.ratio && j.kind != "reproduce-example1") to_ratio(j, h);
  }
  for (std::size_t i = 0; i < j.eta.size(); ++i) real_at(j.eta[i], "/eta/" + std::to_string(i));
  for (std::size_t i = 0; i < j.targets.size(); ++i)
    if (!j.targets[i].bound.empty()) real_at(j.targets[i].bound, "/targets/" + std::to_string(i) + "/bound");
  for (std::size_t i = 0; i < j.family.size(); ++i) {
    Real eta_max = j.eta.empty() ? Real(2) : real_at(j.eta.back(), "/eta");
    for (const auto& e : j.eta) {
      Real x = real_at(e, "/eta");
      if (x.value().lo() > eta_max.value().lo()) eta_max = x;
    }
    build_factor(j.family[i].factor, Real(1), eta_max, "/family/" + std::to_string(i) + "/factor");
  }
  if (j.point) {
    real_at(j.point->sigma_lo, "/point/sigma/0");
    real_at(j.point->sigma_hi, "/point/sigma/1");
    real_at(j.point->t_lo, "/point/t/0");
    real_at(j.point->t_hi, "/point/t/1");
  }
  if (j.region) {
    real_at(j.region->sigma_lo, "/region/sigma/0");
    real_at(j.region->sigma_hi, "/region/sigma/1");
    real_at(j.region->t_lo, "/region/t/0");
    real_at(j.region->t_hi, "/region/t/1");
    real_at(j.region->bound, "/region/bound");
  }
  return j;
}

JobSpec load_jobspec(const std::string& path) { return parse_jobspec(read_file(path)); }

std::string serialize(const JobSpec& j) {
  json o;
  o["schema"] = j.schema;
  o["kind"] = j.kind;
  if (!j.label.empty()) o["label"] = j.label;
  if (!j.note.empty()) o["note"] = j.note;
  if (!j.a.empty()) o["a"] = j.a;
  if (!j.b.empty()) o["b"] = j.b;
  o["f"] = j.f;
  if (!j.factors.empty()) {
    json fs = json::array();
    for (const auto& f : j.factors) fs.push_back(write_factor(f));
    o["factors"] = fs;
  }
  o["T0"] = j.T0;
  o["T_cap"] = j.T_cap;
  if (j.T_max) o["T_max"] = *j.T_max;
  o["growth"] = json{{"C1", j.growth.C1}, {"C2", j.growth.C2}, {"C3", j.growth.C3}, {"statement", j.growth.statement}};
  o["boundary"] = json{{"a", write_boundary(j.at_a)}, {"b", write_boundary(j.at_b)}};
  o["attestations"] = j.attestations;
  if (j.ratio) {
    json parts = json::array();
    for (const auto& p : j.ratio->parts) {
      json q;
      q["kind"] = p.kind;
      if (p.factor) q["factor"] = *p.factor;
      if (p.kind == "linear") q["shift"] = p.shift;
      q["alpha"] = p.alpha;
      q["beta"] = p.beta;
      parts.push_back(q);
    }
    o["ratio"] = json{{"parts", parts}, {"denominator", j.ratio->denominator}};
  }
  if (!j.targets.empty()) {
    json ts = json::array();
    for (const auto& t : j.targets) ts.push_back(json{{"t0", t.t0}, {"bound", t.bound}, {"required", t.required}});
    o["targets"] = ts;
  }
  if (!j.eta.empty()) o["eta"] = j.eta;
  if (!j.family.empty()) {
    json fs = json::array();
    for (const auto& e : j.family)
      fs.push_back(json{{"factor", write_factor(e.factor)},
                        {"T0", e.T0},
                        {"t_from", e.t_from},
                        {"literature", e.literature},
                        {"citation", e.citation}});
    o["family"] = fs;
  }
  if (!j.exponent_check.empty()) o["exponent_check"] = j.exponent_check;
  o["budget"] = j.budget;
  o["constant_budget"] = j.constant_budget;
  if (!j.csv_t.empty()) o["csv"] = json{{"t", j.csv_t}, {"sigma_steps", j.csv_sigma_steps}};
  const auto& out = j.outputs;
  if (!out.certificate.empty() || !out.report.empty() || !out.csv.empty() || !out.events.empty())
    o["outputs"] = json{{"certificate", out.certificate}, {"report", out.report}, {"csv", out.csv}, {"events", out.events}};
  if (j.point) {
    const auto& p = *j.point;
    o["point"] = json{{"target", p.target},
                      {"sigma", {p.sigma_lo, p.sigma_hi}},
                      {"t", {p.t_lo, p.t_hi}},
                      {"width", p.width}};
  }
  if (j.region) {
    const auto& r = *j.region;
    o["region"] = json{{"target", r.target}, {"sense", r.sense},   {"sigma", {r.sigma_lo, r.sigma_hi}},
                       {"t", {r.t_lo, r.t_hi}}, {"bound", r.bound}, {"mode", r.mode}};
  }
  return o.dump(2) + "\n";
}

Factor build_factor(const FactorSpec& fs, const Real& a, const Real& b, const std::string& path) {
  Factor f;
  f.name = fs.name;
  f.alpha = real_at(fs.alpha, path + "/alpha");
  f.beta = real_at(fs.beta, path + "/beta");
  f.display = fs.display;
  f.upper_growth = fs.upper_growth;
  if (!fs.catalog.empty()) {
    std::vector<Real> params;
    for (std::size_t i = 0; i < fs.params.size(); ++i)
      params.push_back(real_at(fs.params[i], path + "/params/" + std::to_string(i)));
    try {
      f.g = build_catalog(fs.catalog, params, Strip{a, b}).expr;
    } catch (const Error& e) {
      if (e.code() == Errc::kBadBuilderParams) throw Error(Errc::kSchemaError, e.what(), path + "/catalog");
      throw;
    }
  } else {
    try {
      f.g = parse_gexpr(fs.expr);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), path + "/expr");
    }
  }
  return f;
}

StripHypotheses to_hypotheses(const JobSpec& j) {
  StripHypotheses h;
  h.label = j.label;
  h.a = real_at(j.a, "/a");
  h.b = real_at(j.b, "/b");
  if (!(h.a.value().hi() < h.b.value().lo())) bad("a < b required", "/b");
  h.f = j.f;
  for (std::size_t i = 0; i < j.factors.size(); ++i)
    h.factors.push_back(build_factor(j.factors[i], h.a, h.b, "/factors/" + std::to_string(i)));
  h.T0 = j.T0;
  h.T_cap = j.T_cap;
  h.T_max = j.T_max;
  h.growth.C1 = real_at(j.growth.C1, "/growth/C1");
  h.growth.C2 = real_at(j.growth.C2, "/growth/C2");
  h.growth.C3 = real_at(j.growth.C3, "/growth/C3");
  h.growth.statement = j.growth.statement;
  auto line = [&](const BoundarySpec& s) {
    BoundaryLine l;
    l.attested = s.attested;
    l.citation = s.citation;
    l.pole_factor = s.pole_factor;
    l.verify_to = s.verify_to;
    for (const auto& c : s.comparisons) l.comparisons.push_back({c.factor, c.t_from});
    return l;
  };
  h.at_a = line(j.at_a);
  h.at_b = line(j.at_b);
  h.attestations = j.attestations;
  h.budget = j.budget;
  validate_hypotheses(h);
  return h;
}

RatioSpec to_ratio(const JobSpec& j, const StripHypotheses& h) {
  RatioSpec r;
  r.label = j.label;
  r.a = h.a;
  r.b = h.b;
  if (!j.ratio) return r;
  r.denominator = j.ratio->denominator;
  for (std::size_t i = 0; i < j.ratio->parts.size(); ++i) {
    const auto& ps = j.ratio->parts[i];
    std::string path = "/ratio/parts/" + std::to_string(i);
    RatioPart p;
    p.alpha = real_at(ps.alpha, path + "/alpha");
    p.beta = real_at(ps.beta, path + "/beta");
    if (ps.kind == "pole") {
      p.kind = RatioPart::Kind::kPole;
      p.label = "|s/(s-1)|";
    } else if (ps.kind == "linear") {
      p.kind = RatioPart::Kind::kLinear;
      p.shift = real_at(ps.shift, path + "/shift");
      p.label = "|" + p.shift.text() + "+s|/t";
    } else {
      p.kind = RatioPart::Kind::kSymLog;
      if (!ps.factor || *ps.factor >= h.factors.size()) bad("factor index out of range", path + "/factor");
      auto sh = classify(h.factors[*ps.factor].g);
      if (!sh || sh->kind != Shape::Kind::kSymLog) bad("factor is not a SymLog catalog shape", path + "/factor");
      p.shape = *sh;
      p.label = "|" + h.factors[*ps.factor].name + "|/" + shape_phi_text(*sh, "log t");
    }
    r.parts.push_back(p);
  }
  return r;
}

std::string certificate_json(const Certificate& c, const std::string& extra_json) {
  json o;
  o["schema"] = c.schema;
  o["label"] = c.hyp.label;
  json h;
  h["a"] = c.hyp.a.text();
  h["b"] = c.hyp.b.text();
  h["a_interval"] = interval_text(c.hyp.a.value());
  h["b_interval"] = interval_text(c.hyp.b.value());
  h["f"] = c.hyp.f;
  json fs = json::array();
  for (const auto& f : c.hyp.factors) {
    json x;
    x["name"] = f.name;
    x["expr"] = to_string(f.g);
    x["alpha"] = f.alpha.text();
    x["beta"] = f.beta.text();
    x["alpha_interval"] = interval_text(f.alpha.value());
    x["beta_interval"] = interval_text(f.beta.value());
    x["shift"] = f.shift.text();
    fs.push_back(x);
  }
  h["factors"] = fs;
  h["T0"] = c.hyp.T0;
  h["T_cap"] = c.hyp.T_cap;
  if (c.hyp.T_max) h["T_max"] = *c.hyp.T_max;
  h["growth"] = json{{"C1", c.hyp.growth.C1.text()}, {"C2", c.hyp.growth.C2.text()}, {"C3", c.hyp.growth.C3.text()}};
  o["hypotheses"] = h;
  json facts = json::array();
  std::vector<std::string> ids;
  for (const auto& f : c.facts) {
    json x;
    x["id"] = f.id();
    x["check"] = f.check;
    x["kind"] = fact_kind_name(f.kind);
    x["claim"] = f.claim;
    x["method"] = f.method;
    x["margin"] = fmt17(f.margin);
    x["boxes"] = f.boxes;
    if (f.counter) {
      x["counter_box"] = json{{"sigma", interval_text(f.counter->sigma)}, {"t", interval_text(f.counter->t)}};
      x["counter_value"] = interval_text(f.counter_value);
    }
    if (f.kind == FactKind::kConditional) x["t_max"] = fmt17(f.t_max);
    if (f.t_symmetric) x["t_symmetric"] = true;
    x["notes"] = f.notes;
    facts.push_back(x);
    ids.push_back(f.id());
  }
  o["facts"] = facts;
  o["attestations"] = c.attestations;
  json concl;
  concl["status"] = status_name(c.status);
  concl["statement"] = c.conclusion;
  concl["facts"] = ids;
  if (c.status == Status::kConditional) concl["watermark"] = "CONDITIONAL";
  if (!extra_json.empty()) {
    json extra = json::parse(extra_json);
    for (auto& [k, v] : extra.items()) concl[k] = v;
  }
  o["conclusion"] = concl;
  o["toolchain"] = c.toolchain;
  return o.dump(2);
}

std::string bound_csv(const Certificate& c, const std::vector<double>& ts, int sigma_steps) {
  std::ostringstream out;
  out << "sigma,t,bound_upper\n";
  const RealInterval a = c.hyp.a.value();
  const RealInterval b = c.hyp.b.value();
  for (double t : ts) {
    for (int k = 0; k <= sigma_steps; ++k) {
      // Endpoints use the exact strip ends, interior points the decimal grid.
      RealInterval s = k == 0 ? a : k == sigma_steps ? b : RealInterval(a.mid() + (b.mid() - a.mid()) * k / sigma_steps);
      RealInterval v = bound_at(c, s, RealInterval(t));
      out << fmt17(s.mid()) << "," << fmt17(t) << "," << fmt17(v.hi()) << "\n";
    }
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  fs::path p(path);
  fs::path tmp = p;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(Errc::kIo, "cannot write " + tmp.string());
    f << text;
    f.flush();
    if (!f) throw Error(Errc::kIo, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(Errc::kIo, "cannot rename into " + path);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace plc
