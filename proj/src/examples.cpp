// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "plcert/jobspec.hpp"
#include "plcert/zeta.hpp"

namespace plc {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(double x, int digits = 17) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

// Excess over 1 in short form, e.g. "1 + 2.148e-10".
std::string excess(double x) {
  if (!(x >= 1.0)) return fmt(x, 12);
  return "1 + " + fmt(x - 1.0, 4);
}

std::string t0_label(double t0) {
  double k = std::log10(t0);
  if (std::fabs(k - std::round(k)) < 1e-12) return "10^" + std::to_string(static_cast<int>(std::round(k)));
  return fmt(t0, 6);
}

class Clock {
 public:
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double d = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return d;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

// Event sink shared by the verifier callbacks and job-level events.
class Events {
 public:
  Events(const std::string& path, std::function<void(const std::string&)> cb) : cb_(std::move(cb)) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::trunc);
      if (!*file_) throw Error(Errc::kIo, "cannot open event stream " + path);
    }
  }

  void operator()(const std::string& line) {
    std::lock_guard<std::mutex> lock(mu_);
    if (file_) {
      *file_ << line << "\n";
      file_->flush();
    }
    if (cb_) cb_(line);
  }

  bool active() const { return file_ || cb_; }

  std::function<void(const std::string&)> fn() {
    if (!active()) return {};
    return [this](const std::string& l) { (*this)(l); };
  }

 private:
  std::mutex mu_;
  std::unique_ptr<std::ofstream> file_;
  std::function<void(const std::string&)> cb_;
};

struct Ctx {
  const JobSpec& job;
  const RunOptions& ro;
  Events& events;
  VerifyOptions vo;
  std::size_t budget;
  double T_cap;
};

void emit_row(Ctx& cx, const ReportRow& r) {
  if (!cx.events.active()) return;
  json j{{"event", "row"}, {"label", r.label}, {"upper", r.upper}, {"target", r.target},
         {"verdict", r.verdict}, {"seconds", r.seconds}, {"boxes", r.boxes}};
  cx.events(j.dump());
}

std::string facts_report(const Certificate& c) {
  std::ostringstream out;
  out << "  status: " << status_name(c.status) << "\n";
  out << "  conclusion: " << c.conclusion << "\n";
  for (const auto& f : c.facts) {
    out << "  [" << fact_kind_name(f.kind) << "] " << f.check << ": " << f.claim;
    if (f.ok()) out << " (margin " << fmt(f.margin, 4) << ", " << f.boxes << " boxes)";
    if (f.counter) out << " counter box " << f.counter->str() << " value " << f.counter_value.str();
    out << "\n";
    for (const auto& n : f.notes) out << "      " << n << "\n";
  }
  return out.str();
}

std::vector<TargetSpec> wanted_targets(const Ctx& cx) {
  std::vector<TargetSpec> out;
  if (cx.ro.t0.empty()) return cx.job.targets;
  for (double t0 : cx.ro.t0) {
    TargetSpec ts{t0, "", true};
    for (const auto& t : cx.job.targets)
      if (t.t0 == t0) ts = t;
    out.push_back(ts);
  }
  return out;
}

// Certified constant row. Pass requires a converged upper bound >= 1 and, when
// a target is given, upper <= target.
ReportRow constant_row(const std::string& label, const RatioSpec& rs, const TargetSpec& ts, std::size_t budget,
                       ConstantResult* keep = nullptr) {
  Clock clock;
  ConstantResult k = ratio_sup(rs, ts.t0, budget);
  if (keep) *keep = k;
  ReportRow r;
  r.label = label;
  r.upper = fmt(k.value.hi());
  r.boxes = k.boxes;
  bool within = k.converged && k.ge_one;
  if (!ts.bound.empty()) {
    Real target = Real::parse(ts.bound);
    r.target = ts.bound;
    within = within && k.value.hi() <= target.value().lo();
  }
  r.pass = within;
  if (within) r.verdict = "pass";
  else if (!ts.required) r.verdict = "inconclusive";
  else r.verdict = "fail";
  r.seconds = clock.lap();
  return r;
}

std::string rows_report(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "  %-16s %-26s %-16s %-12s %9s %8s\n", "row", "certified upper", "target", "verdict",
                "boxes", "seconds");
  out << line;
  for (const auto& r : rows) {
    double u = std::strtod(r.upper.c_str(), nullptr);
    std::string up = r.upper.empty() ? "-" : excess(u);
    std::snprintf(line, sizeof line, "  %-16s %-26s %-16s %-12s %9zu %8.2f\n", r.label.c_str(), up.c_str(),
                  r.target.empty() ? "-" : r.target.c_str(), r.verdict.c_str(), r.boxes, r.seconds);
    out << line;
  }
  return out.str();
}

void write_outputs(const OutputSpec& o, const RunOutput& out) {
  if (!o.certificate.empty() && !out.certificate.empty()) write_file_atomic(o.certificate, out.certificate + "\n");
  if (!o.report.empty()) write_file_atomic(o.report, out.report);
  if (!o.csv.empty() && !out.csv.empty()) write_file_atomic(o.csv, out.csv);
}

std::vector<double> csv_heights(const JobSpec& j) {
  if (!j.csv_t.empty()) return j.csv_t;
  return {10.0, 100.0, 1000.0, 1e4, 1e5};
}

// Exponent of t contributed by Linear factors, as exact affine text.
std::string t_exponent_text(const StripHypotheses& h, const JobSpec& j) {
  std::optional<Rational> c0 = Rational(0), c1 = Rational(0);
  for (std::size_t i = 0; i < h.factors.size(); ++i) {
    if (j.factors[i].catalog != "Linear") continue;
    const Factor& f = h.factors[i];
    auto ab = exponent_affine(f.alpha - f.shift, f.beta - f.shift, h.a, h.b);
    if (!ab) return "non-rational";
    if (c0) c0 = add(*c0, ab->first);
    if (c0 && c1) c1 = add(*c1, ab->second);
  }
  if (!c0 || !c1) return "overflow";
  // c0 + c1 sigma written through exponent_text with matching endpoint values.
  auto at = [&](const Real& x) {
    auto xr = x.rational();
    return xr ? add(*c0, *mul(*c1, *xr)) : std::nullopt;
  };
  auto ea = at(h.a), eb = at(h.b);
  if (!ea || !eb) return "overflow";
  return exponent_text(Real(*ea), Real(*eb), h.a, h.b);
}

// certify, constant, reproduce-example2/3
RunOutput run_strip(Ctx& cx, bool constants) {
  const JobSpec& j = cx.job;
  RunOutput out;
  Clock clock;
  StripHypotheses h = to_hypotheses(j);
  h.budget = cx.budget;
  h.T_cap = cx.T_cap;
  CertifyOptions co;
  co.verify = cx.vo;
  Certificate c = certify_strip(h, co);
  double cert_seconds = clock.lap();
  std::ostringstream rep;
  rep << (j.label.empty() ? j.kind : j.label) << "\n";
  if (!j.note.empty()) rep << "  note: " << j.note << "\n";
  rep << facts_report(c);
  bool ok = c.status == Status::kCertified;
  ReportRow cert_row;
  cert_row.label = "certificate";
  cert_row.verdict = ok ? "pass" : (c.status == Status::kRefuted ? "fail" : "inconclusive");
  cert_row.pass = ok;
  cert_row.upper = "";
  cert_row.target = status_name(c.status);
  cert_row.seconds = cert_seconds;
  for (const auto& f : c.facts) cert_row.boxes += f.boxes;
  out.rows.push_back(cert_row);
  emit_row(cx, cert_row);

  json extra = json::object();
  if (constants && j.ratio) {
    RatioSpec rs = to_ratio(j, c.hyp);
    json ks = json::array();
    std::vector<ReportRow> rows;
    for (const auto& ts : wanted_targets(cx)) {
      if (!(c.status == Status::kCertified || c.status == Status::kConditional)) break;
      ConstantResult k;
      ReportRow r = constant_row("C(" + t0_label(ts.t0) + ")", rs, ts, j.constant_budget, &k);
      ok = ok && (r.pass || !ts.required);
      rows.push_back(r);
      emit_row(cx, r);
      RenderedBound rb = final_inequality(c, rs, ts.t0);
      rep << "  bound: " << rb.text << "\n";
      ks.push_back(json{{"t0", fmt(ts.t0)},
                        {"constant_upper", fmt(k.value.hi())},
                        {"constant_witness", fmt(k.value.lo())},
                        {"target", ts.bound},
                        {"verdict", r.verdict},
                        {"bound", rb.text}});
    }
    extra["constants"] = ks;
    if (!rows.empty()) rep << rows_report(rows);
    for (auto& r : rows) out.rows.push_back(r);
  }
  if (!j.exponent_check.empty()) {
    std::string got = t_exponent_text(c.hyp, j);
    ReportRow r;
    r.label = "t exponent";
    r.upper = "";
    r.target = j.exponent_check;
    r.pass = got == j.exponent_check;
    r.verdict = r.pass ? "pass" : "fail";
    ok = ok && r.pass;
    rep << "  exponent of t: " << got << " (expected " << j.exponent_check << ") " << r.verdict << "\n";
    extra["t_exponent"] = got;
    out.rows.push_back(r);
    emit_row(cx, r);
  }
  out.certificate = certificate_json(c, extra.empty() ? std::string() : extra.dump());
  if (!cx.ro.outputs.csv.empty() || !j.outputs.csv.empty() || !j.csv_t.empty()) {
    if (c.status == Status::kCertified || c.status == Status::kConditional)
      out.csv = bound_csv(c, csv_heights(j), j.csv_sigma_steps);
  }
  rep << "  result: " << (ok ? "all requested facts certified" : "not certified") << "\n";
  out.report = rep.str();
  out.exit_code = ok ? 0 : 1;
  return out;
}

RunOutput run_table(Ctx& cx) {
  const JobSpec& j = cx.job;
  RunOutput out;
  Real a = Real::parse(j.a), b = Real::parse(j.b);
  StripHypotheses h;
  h.a = a;
  h.b = b;
  for (std::size_t i = 0; i < j.factors.size(); ++i)
    h.factors.push_back(build_factor(j.factors[i], a, b, "/factors/" + std::to_string(i)));
  RatioSpec rs = to_ratio(j, h);
  bool ok = true;
  for (const auto& ts : wanted_targets(cx)) {
    ReportRow r = constant_row("C(" + t0_label(ts.t0) + ")", rs, ts, j.constant_budget);
    ok = ok && (r.pass || !ts.required);
    out.rows.push_back(r);
    emit_row(cx, r);
  }
  out.report = (j.label.empty() ? "table" : j.label) + "\n" + rows_report(out.rows);
  out.exit_code = ok ? 0 : 1;
  return out;
}

// Smallest decimal Z with 12 significant digits and zeta(eta) <= Z.
std::string zeta_upper_text(const Real& eta) {
  ComplexRect z = zeta_em(ComplexRect(eta.value(), RealInterval(0.0)), 1e-15);
  double hi = z.re.hi();
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12e", hi);
  double v = std::strtod(buf, nullptr);
  if (v < hi) {
    std::snprintf(buf, sizeof buf, "%.12e", std::nextafter(hi, HUGE_VAL) + std::fabs(hi) * 1e-12);
  }
  return buf;
}

RunOutput run_family(Ctx& cx) {
  const JobSpec& j = cx.job;
  RunOutput out;
  std::vector<std::string> etas = cx.ro.eta.empty() ? j.eta : cx.ro.eta;
  Real eta_max = Real::parse(etas.front());
  for (const auto& e : etas) {
    Real x = Real::parse(e);
    if (!(x.value().lo() > 1.0) || x.value().hi() > 2.0)
      throw Error(Errc::kDomainViolation, "eta must lie in (1, 2], got " + e);
    if (x.value().lo() > eta_max.value().lo()) eta_max = x;
  }
  std::ostringstream rep;
  rep << (j.label.empty() ? j.kind : j.label) << "\n";
  if (!j.note.empty()) rep << "  note: " << j.note << "\n";
  bool ok = true;
  json certs = json::array();
  std::vector<ReportRow> table;
  std::string csv;
  const Real one(1);
  for (std::size_t i = 0; i < j.family.size(); ++i) {
    const FamilyEntry& fe = j.family[i];
    Clock clock;
    Factor g = build_factor(fe.factor, one, eta_max, "/family/" + std::to_string(i) + "/factor");
    std::size_t cert_boxes = 0;
    int certified = 0;
    for (const auto& e : etas) {
      Real eta = Real::parse(e);
      std::string z = zeta_upper_text(eta);
      StripHypotheses h;
      h.label = j.label + " " + g.name + " eta=" + e;
      h.a = one;
      h.b = eta;
      h.f = "f_zeta";
      h.factors.push_back(g);
      Factor ef;
      ef.name = "E";
      ef.g = GExpr::constant(Real::euler());
      ef.alpha = Real(0);
      ef.beta = Real::parse("log(" + z + ")");
      ef.display = "zeta(" + e + ")";
      h.factors.push_back(ef);
      h.T0 = fe.T0;
      h.T_cap = cx.T_cap;
      h.growth.C1 = Real::parse(j.growth.C1);
      h.growth.C2 = Real::parse(j.growth.C2);
      h.growth.C3 = Real::parse(j.growth.C3);
      h.growth.statement = j.growth.statement;
      h.at_a.attested = fe.literature;
      h.at_a.citation = fe.citation;
      h.at_a.pole_factor = true;
      h.at_a.comparisons.push_back({0, fe.t_from});
      h.at_b.attested = j.at_b.attested.empty() ? "|zeta(eta+it)| <= zeta(eta)" : j.at_b.attested;
      h.at_b.citation = j.at_b.citation;
      h.at_b.pole_factor = true;
      h.attestations = j.attestations;
      h.budget = cx.budget;
      CertifyOptions co;
      co.verify = cx.vo;
      co.fact_strip = std::make_pair(one, eta_max);
      Fact zf;
      zf.check = "zeta_value";
      zf.claim = "zeta(" + e + ") <= " + z;
      zf.method = "Euler-Maclaurin enclosure";
      ComplexRect zv = zeta_em(ComplexRect(eta.value(), RealInterval(0.0)), 1e-15);
      double zlo = Real::parse(z).value().lo();
      zf.kind = zv.re.hi() <= zlo && zv.im.contains(0.0) ? FactKind::kVerified : FactKind::kBudgetExhausted;
      zf.margin = zlo - zv.re.hi();
      co.extra_facts.push_back(zf);
      Certificate c = certify_strip(h, co);
      for (const auto& f : c.facts) cert_boxes += f.boxes;
      if (c.status == Status::kCertified) ++certified;
      else ok = false;
      rep << g.name << " eta = " << e << "\n" << facts_report(c);
      certs.push_back(json::parse(certificate_json(c)));
      bool want_csv = !cx.ro.outputs.csv.empty() || !j.outputs.csv.empty() || !j.csv_t.empty();
      if (want_csv && i == 0 && e == etas.back() && c.status == Status::kCertified)
        csv = bound_csv(c, csv_heights(j), j.csv_sigma_steps);
    }
    ReportRow cr;
    cr.label = g.name + " certs";
    cr.upper = "";
    cr.target = std::to_string(certified) + "/" + std::to_string(etas.size()) + " certified";
    cr.pass = certified == static_cast<int>(etas.size());
    cr.verdict = cr.pass ? "pass" : "fail";
    cr.boxes = cert_boxes;
    cr.seconds = clock.lap();
    out.rows.push_back(cr);
    emit_row(cx, cr);
    if (!cr.pass) continue;

    // C_i(t0) over sigma in [1, max eta]; the ratio does not depend on eta.
    StripHypotheses hs;
    hs.a = one;
    hs.b = eta_max;
    hs.factors.push_back(g);
    JobSpec rj = j;
    for (auto& p : rj.ratio->parts)
      if (p.kind == "symlog") p.factor = 0;
    rj.label = g.name;
    RatioSpec rs = to_ratio(rj, hs);
    for (const auto& ts : wanted_targets(cx)) {
      ReportRow r = constant_row("C_" + std::to_string(i + 1) + "(" + t0_label(ts.t0) + ")", rs, ts,
                                 j.constant_budget);
      ok = ok && (r.pass || !ts.required);
      out.rows.push_back(r);
      table.push_back(r);
      emit_row(cx, r);
    }
  }
  rep << "constants (sigma in [1, " << eta_max.text() << "], t > t0)\n" << rows_report(table);
  rep << "  result: " << (ok ? "all requested facts certified" : "not certified") << "\n";
  out.report = rep.str();
  out.certificate = certs.dump(2);
  out.csv = csv;
  out.exit_code = ok ? 0 : 1;
  return out;
}

RunOutput run_point(Ctx& cx) {
  const PointSpec& p = *cx.job.point;
  Real s0 = Real::parse(p.sigma_lo), s1 = Real::parse(p.sigma_hi);
  Real t0 = Real::parse(p.t_lo), t1 = Real::parse(p.t_hi);
  ComplexRect s(RealInterval(s0.value().lo(), s1.value().hi()), RealInterval(t0.value().lo(), t1.value().hi()));
  ComplexRect z = p.target == "zeta" ? zeta_em(s, p.width) : f_zeta(s, p.width);
  RealInterval m = cx_abs(z);
  RunOutput out;
  std::ostringstream rep;
  rep << p.target << "(" << s.re.str() << " + i" << s.im.str() << ")\n";
  rep << "  re  " << interval_text(z.re) << "\n";
  rep << "  im  " << interval_text(z.im) << "\n";
  rep << "  abs " << interval_text(m) << "\n";
  out.report = rep.str();
  json j{{"schema", kSchemaVersion},
         {"target", p.target},
         {"sigma", interval_text(s.re)},
         {"t", interval_text(s.im)},
         {"re", interval_text(z.re)},
         {"im", interval_text(z.im)},
         {"abs", interval_text(m)}};
  out.certificate = j.dump(2);
  ReportRow r;
  r.label = p.target;
  r.upper = fmt(m.hi());
  r.pass = true;
  r.verdict = "pass";
  out.rows.push_back(r);
  out.exit_code = 0;
  return out;
}

RunOutput run_region(Ctx& cx) {
  const RegionSpec& g = *cx.job.region;
  Real s0 = Real::parse(g.sigma_lo), s1 = Real::parse(g.sigma_hi);
  Real t0 = Real::parse(g.t_lo), t1 = Real::parse(g.t_hi);
  Real bound = Real::parse(g.bound);
  RegionCheck rc;
  rc.target = make_target(g.target);
  rc.region = Box{RealInterval(s0.value().lo(), s1.value().hi()), RealInterval(t0.value().lo(), t1.value().hi())};
  rc.bound = bound.value();
  rc.mode = g.mode == "boundary" ? Mode::kBoundaryOnly : Mode::kFullRegion;
  rc.budget = cx.budget;
  Clock clock;
  Fact f = g.sense == "sup" ? verify_sup(rc, cx.vo) : verify_inf(rc, cx.vo);
  RunOutput out;
  ReportRow r;
  r.label = g.sense + " |" + g.target + "| " + (g.sense == "sup" ? "<= " : ">= ") + g.bound;
  r.target = fact_kind_name(f.kind);
  r.pass = f.kind == FactKind::kVerified;
  r.verdict = r.pass ? "pass" : (f.kind == FactKind::kCounterBox ? "fail" : "inconclusive");
  r.boxes = f.boxes;
  r.seconds = clock.lap();
  out.rows.push_back(r);
  emit_row(cx, r);
  std::ostringstream rep;
  rep << r.label << " on " << rc.region.str() << " (" << g.mode << ")\n";
  rep << "  [" << fact_kind_name(f.kind) << "] " << f.claim << "\n";
  rep << "  method: " << f.method << ", margin " << fmt(f.margin, 6) << ", " << f.boxes << " boxes\n";
  if (f.counter) rep << "  counter box " << f.counter->str() << " value " << f.counter_value.str() << "\n";
  for (const auto& n : f.notes) rep << "  " << n << "\n";
  out.report = rep.str();
  json j{{"schema", kSchemaVersion},
         {"id", f.id()},
         {"check", f.check},
         {"kind", fact_kind_name(f.kind)},
         {"claim", f.claim},
         {"method", f.method},
         {"margin", fmt(f.margin)},
         {"boxes", f.boxes}};
  if (f.counter) {
    j["counter_box"] = json{{"sigma", interval_text(f.counter->sigma)}, {"t", interval_text(f.counter->t)}};
    j["counter_value"] = interval_text(f.counter_value);
  }
  out.certificate = j.dump(2);
  out.exit_code = r.pass ? 0 : 1;
  return out;
}

}  // namespace

RunOutput run_job(const JobSpec& j, const RunOptions& ro) {
  OutputSpec outs = j.outputs;
  if (!ro.outputs.certificate.empty()) outs.certificate = ro.outputs.certificate;
  if (!ro.outputs.report.empty()) outs.report = ro.outputs.report;
  if (!ro.outputs.csv.empty()) outs.csv = ro.outputs.csv;
  if (!ro.outputs.events.empty()) outs.events = ro.outputs.events;
  Events events(outs.events, ro.events);
  Ctx cx{j, ro, events, {}, ro.budget.value_or(j.budget), ro.T_cap.value_or(j.T_cap)};
  cx.vo.budget = cx.budget;
  cx.vo.events = events.fn();
  if (events.active()) events(json{{"event", "start"}, {"kind", j.kind}, {"label", j.label}}.dump());
  RunOutput out;
  if (j.kind == "certify") out = run_strip(cx, false);
  else if (j.kind == "constant" || j.kind == "reproduce-example2" || j.kind == "reproduce-example3")
    out = run_strip(cx, true);
  else if (j.kind == "table") out = run_table(cx);
  else if (j.kind == "reproduce-example1") out = run_family(cx);
  else if (j.kind == "zeta") out = run_point(cx);
  else if (j.kind == "verify-region") out = run_region(cx);
  else throw Error(Errc::kUsage, "unknown kind " + j.kind);
  if (events.active()) events(json{{"event", "done"}, {"exit_code", out.exit_code}}.dump());
  write_outputs(outs, out);
  return out;
}

JobSpec example_job(int n) {
  auto it = example_data().find("example" + std::to_string(n));
  if (it == example_data().end()) throw Error(Errc::kUsage, "no canned example " + std::to_string(n));
  return parse_jobspec(it->second);
}

}  // namespace plc
