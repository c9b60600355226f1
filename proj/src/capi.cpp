// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#include "plcert/plcert.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "plcert/jobspec.hpp"
#include "plcert/zeta.hpp"

#ifndef PLCERT_VERSION
#define PLCERT_VERSION "0.0.0"
#endif

struct plc_context {
  plc::RunOptions ro;
  plc_event_fn event_fn = nullptr;
  void* event_user = nullptr;
  std::string error;
  std::string error_path;
};

struct plc_result {
  plc::RunOutput out;
};

namespace {

plc_status status_for(plc::Errc c) {
  switch (c) {
    case plc::Errc::kSchemaError:
    case plc::Errc::kMissingGrowthAttestation:
    case plc::Errc::kBadBuilderParams: return PLC_E_SCHEMA;
    case plc::Errc::kParseError: return PLC_E_PARSE;
    case plc::Errc::kIo: return PLC_E_IO;
    case plc::Errc::kUsage: return PLC_E_USAGE;
    case plc::Errc::kInternal:
    case plc::Errc::kUnreachable: return PLC_E_INTERNAL;
    default: return PLC_E_DOMAIN;
  }
}

template <class F>
plc_status guarded(plc_context* ctx, F&& fn) {
  if (!ctx) return PLC_E_NULL;
  ctx->error.clear();
  ctx->error_path.clear();
  try {
    return fn();
  } catch (const plc::Error& e) {
    ctx->error = std::string(plc::errc_name(e.code())) + ": " + e.what();
    ctx->error_path = e.path();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return PLC_E_INTERNAL;
  } catch (const std::exception& e) {
    ctx->error = std::string("internal error: ") + e.what();
    return PLC_E_INTERNAL;
  }
}

plc::RunOptions options(plc_context* ctx) {
  plc::RunOptions ro = ctx->ro;
  if (ctx->event_fn) {
    plc_event_fn fn = ctx->event_fn;
    void* user = ctx->event_user;
    ro.events = [fn, user](const std::string& line) { fn(line.c_str(), user); };
  }
  return ro;
}

plc_status finish(plc::RunOutput&& out, plc_result** res) {
  auto* r = new plc_result{std::move(out)};
  *res = r;
  return r->out.exit_code == 0 ? PLC_OK : PLC_NOT_CERTIFIED;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

plc::RunOutput selftest() {
  using namespace plc;
  RunOutput out;
  std::ostringstream rep;
  bool all = true;
  auto row = [&](const std::string& label, bool pass, const std::string& detail) {
    ReportRow r;
    r.label = label;
    r.pass = pass;
    r.verdict = pass ? "pass" : "fail";
    r.target = detail;
    out.rows.push_back(r);
    rep << (pass ? "PASS " : "FAIL ") << label << ": " << detail << "\n";
    all = all && pass;
  };

  ComplexRect z2 = zeta_em(ComplexRect(2.0, 0.0), 1e-14);
  RealInterval pi2 = RealInterval::pi() * RealInterval::pi() / RealInterval(6.0);
  bool ok = z2.re.lo() <= pi2.hi() && pi2.lo() <= z2.re.hi() && z2.re.width() < 1e-12;
  row("zeta(2)", ok, "enclosure " + interval_text(z2.re));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  int bad = 0;
  for (int i = 0; i < 2000; ++i) {
    double x = u(rng), y = u(rng);
    RealInterval a(x), b(y);
    long double lx = x, ly = y;
    RealInterval sum = a + b;
    if (!(sum.lo() <= lx + ly && lx + ly <= sum.hi())) ++bad;
    RealInterval m = a * b;
    double p = x * y, err = std::fma(x, y, -p);
    if (!(m.lo() <= p && p <= m.hi()) || (err > 0 && !(m.hi() > p)) || (err < 0 && !(m.lo() < p))) ++bad;
    RealInterval e = exp(RealInterval(x));
    if (!(e.lo() <= std::exp(x) && std::exp(x) <= e.hi())) ++bad;
  }
  row("interval containment", bad == 0, std::to_string(bad) + " violations in 2000 samples");

  RegionCheck rc;
  rc.target = f_zeta_target(1e-10);
  rc.region = Box{RealInterval(1.0, 2.0), RealInterval(0.0, 3.0)};
  rc.bound = RealInterval(1.0);
  rc.mode = Mode::kBoundaryOnly;
  Fact f = verify_sup(rc);
  row("|f_zeta| <= 1 on [1,2]x[0,3]", f.kind == FactKind::kVerified, std::string(fact_kind_name(f.kind)) + ", " +
                                                                      std::to_string(f.boxes) + " boxes");

  for (int n = 1; n <= 3; ++n) {
    JobSpec j = example_job(n);
    std::string s1 = serialize(j);
    std::string s2 = serialize(parse_jobspec(s1));
    row("example " + std::to_string(n) + " spec round trip", s1 == s2, j.kind);
  }

  out.report = rep.str();
  out.exit_code = all ? 0 : 1;
  return out;
}

}  // namespace

extern "C" {

PLC_API const char* plc_version(void) { return PLCERT_VERSION; }

PLC_API const char* plc_status_name(plc_status s) {
  switch (s) {
    case PLC_OK: return "ok";
    case PLC_NOT_CERTIFIED: return "not certified";
    case PLC_E_USAGE: return "usage error";
    case PLC_E_SCHEMA: return "schema error";
    case PLC_E_PARSE: return "parse error";
    case PLC_E_DOMAIN: return "domain error";
    case PLC_E_IO: return "i/o error";
    case PLC_E_INTERNAL: return "internal error";
    case PLC_E_NULL: return "null argument";
  }
  return "unknown";
}

PLC_API plc_status plc_context_new(plc_context** out) {
  if (!out) return PLC_E_NULL;
  *out = new (std::nothrow) plc_context();
  return *out ? PLC_OK : PLC_E_INTERNAL;
}

PLC_API void plc_context_free(plc_context* ctx) { delete ctx; }

PLC_API const char* plc_last_error(const plc_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

PLC_API const char* plc_last_error_path(const plc_context* ctx) { return ctx ? ctx->error_path.c_str() : ""; }

PLC_API plc_status plc_set_budget(plc_context* ctx, size_t budget) {
  return guarded(ctx, [&] {
    if (budget == 0) throw plc::Error(plc::Errc::kUsage, "budget must be positive");
    ctx->ro.budget = budget;
    return PLC_OK;
  });
}

PLC_API plc_status plc_set_t_cap(plc_context* ctx, double t_cap) {
  return guarded(ctx, [&] {
    if (!(t_cap > 3.0) || !std::isfinite(t_cap)) throw plc::Error(plc::Errc::kUsage, "t-cap must exceed 3");
    ctx->ro.T_cap = t_cap;
    return PLC_OK;
  });
}

PLC_API plc_status plc_add_t0(plc_context* ctx, double t0) {
  return guarded(ctx, [&] {
    if (!(t0 >= 3.0) || !std::isfinite(t0)) throw plc::Error(plc::Errc::kUsage, "t0 must be at least 3");
    ctx->ro.t0.push_back(t0);
    return PLC_OK;
  });
}

PLC_API plc_status plc_add_eta(plc_context* ctx, const char* eta) {
  return guarded(ctx, [&] {
    if (!eta) return PLC_E_NULL;
    plc::Real x = plc::Real::parse(eta);
    if (!(x.value().lo() > 1.0 && x.value().hi() <= 2.0))
      throw plc::Error(plc::Errc::kUsage, std::string("eta must lie in (1, 2], got ") + eta);
    ctx->ro.eta.push_back(eta);
    return PLC_OK;
  });
}

PLC_API plc_status plc_set_output(plc_context* ctx, const char* kind, const char* path) {
  return guarded(ctx, [&] {
    if (!kind || !path) return PLC_E_NULL;
    std::string k = kind;
    if (k == "certificate") ctx->ro.outputs.certificate = path;
    else if (k == "report") ctx->ro.outputs.report = path;
    else if (k == "csv") ctx->ro.outputs.csv = path;
    else if (k == "events") ctx->ro.outputs.events = path;
    else throw plc::Error(plc::Errc::kUsage, "unknown output kind '" + k + "'");
    return PLC_OK;
  });
}

PLC_API plc_status plc_set_event_callback(plc_context* ctx, plc_event_fn fn, void* user) {
  if (!ctx) return PLC_E_NULL;
  ctx->event_fn = fn;
  ctx->event_user = user;
  return PLC_OK;
}

PLC_API plc_status plc_run_json(plc_context* ctx, const char* json, plc_result** out) {
  return guarded(ctx, [&] {
    if (!json || !out) return PLC_E_NULL;
    *out = nullptr;
    plc::JobSpec j = plc::parse_jobspec(json);
    return finish(plc::run_job(j, options(ctx)), out);
  });
}

PLC_API plc_status plc_run_file(plc_context* ctx, const char* path, plc_result** out) {
  return guarded(ctx, [&] {
    if (!path || !out) return PLC_E_NULL;
    *out = nullptr;
    plc::JobSpec j = plc::load_jobspec(path);
    return finish(plc::run_job(j, options(ctx)), out);
  });
}

PLC_API plc_status plc_run_example(plc_context* ctx, int example, plc_result** out) {
  return guarded(ctx, [&] {
    if (!out) return PLC_E_NULL;
    *out = nullptr;
    plc::JobSpec j = plc::example_job(example);
    return finish(plc::run_job(j, options(ctx)), out);
  });
}

PLC_API plc_status plc_normalize_json(plc_context* ctx, const char* json, char** out) {
  return guarded(ctx, [&] {
    if (!json || !out) return PLC_E_NULL;
    *out = dup(plc::serialize(plc::parse_jobspec(json)));
    return PLC_OK;
  });
}

PLC_API plc_status plc_example_json(plc_context* ctx, int example, char** out) {
  return guarded(ctx, [&] {
    if (!out) return PLC_E_NULL;
    auto it = plc::example_data().find("example" + std::to_string(example));
    if (it == plc::example_data().end())
      throw plc::Error(plc::Errc::kUsage, "no canned example " + std::to_string(example));
    *out = dup(it->second);
    return PLC_OK;
  });
}

PLC_API void plc_string_free(char* s) { std::free(s); }

PLC_API plc_status plc_selftest(plc_context* ctx, plc_result** out) {
  return guarded(ctx, [&] {
    if (!out) return PLC_E_NULL;
    *out = nullptr;
    return finish(selftest(), out);
  });
}

PLC_API int plc_result_exit_code(const plc_result* r) { return r ? r->out.exit_code : 2; }
PLC_API const char* plc_result_report(const plc_result* r) { return r ? r->out.report.c_str() : ""; }
PLC_API const char* plc_result_certificate(const plc_result* r) { return r ? r->out.certificate.c_str() : ""; }
PLC_API const char* plc_result_csv(const plc_result* r) { return r ? r->out.csv.c_str() : ""; }
PLC_API size_t plc_result_row_count(const plc_result* r) { return r ? r->out.rows.size() : 0; }

PLC_API plc_status plc_result_row(const plc_result* r, size_t i, plc_row* out) {
  if (!r || !out) return PLC_E_NULL;
  if (i >= r->out.rows.size()) return PLC_E_USAGE;
  const plc::ReportRow& row = r->out.rows[i];
  out->label = row.label.c_str();
  out->upper = row.upper.c_str();
  out->target = row.target.c_str();
  out->verdict = row.verdict.c_str();
  out->pass = row.pass ? 1 : 0;
  out->seconds = row.seconds;
  out->boxes = row.boxes;
  return PLC_OK;
}

PLC_API void plc_result_free(plc_result* r) { delete r; }

}  // extern "C"
