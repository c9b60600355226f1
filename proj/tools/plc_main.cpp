// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0
//
// plc: command-line front end over the C interface.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plcert/plcert.h"

namespace {

struct Common {
  std::size_t budget = 0;
  double t_cap = 0.0;
  std::vector<std::string> eta;
  std::vector<double> t0;
  std::string out, csv, events, report;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--budget", c.budget, "Maximum number of boxes per verification");
  app->add_option("--t-cap", c.t_cap, "Height up to which checks run by subdivision");
  app->add_option("--eta", c.eta, "Right edge(s) eta for example 1 (repeatable)");
  app->add_option("--t0", c.t0, "Heights t0 for constants (repeatable)");
  app->add_option("--out", c.out, "Certificate JSON path, '-' for stdout");
  app->add_option("--csv", c.csv, "CSV of bound curves (sigma, t, bound_upper)");
  app->add_option("--events", c.events, "Line-delimited JSON event stream");
  app->add_option("--report", c.report, "Also write the human report to this path");
}

int fail(plc_context* ctx, plc_status s) {
  std::fprintf(stderr, "plc: %s: %s", plc_status_name(s), plc_last_error(ctx));
  const char* path = plc_last_error_path(ctx);
  if (path && *path) std::fprintf(stderr, " (at %s)", path);
  std::fprintf(stderr, "\n");
  return 2;
}

int configure(plc_context* ctx, const Common& c) {
  plc_status s = PLC_OK;
  if (c.budget > 0 && (s = plc_set_budget(ctx, c.budget)) != PLC_OK) return fail(ctx, s);
  if (c.t_cap > 0 && (s = plc_set_t_cap(ctx, c.t_cap)) != PLC_OK) return fail(ctx, s);
  for (const auto& e : c.eta)
    if ((s = plc_add_eta(ctx, e.c_str())) != PLC_OK) return fail(ctx, s);
  for (double t : c.t0)
    if ((s = plc_add_t0(ctx, t)) != PLC_OK) return fail(ctx, s);
  if (!c.out.empty() && c.out != "-" && (s = plc_set_output(ctx, "certificate", c.out.c_str())) != PLC_OK)
    return fail(ctx, s);
  if (!c.csv.empty() && (s = plc_set_output(ctx, "csv", c.csv.c_str())) != PLC_OK) return fail(ctx, s);
  if (!c.events.empty() && (s = plc_set_output(ctx, "events", c.events.c_str())) != PLC_OK) return fail(ctx, s);
  if (!c.report.empty() && (s = plc_set_output(ctx, "report", c.report.c_str())) != PLC_OK) return fail(ctx, s);
  return 0;
}

int finish(plc_context* ctx, plc_status s, plc_result* r, const Common& c) {
  if (s != PLC_OK && s != PLC_NOT_CERTIFIED) return fail(ctx, s);
  std::fputs(plc_result_report(r), stdout);
  if (c.out == "-") std::printf("%s\n", plc_result_certificate(r));
  int code = plc_result_exit_code(r);
  plc_result_free(r);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plc: certified Phragmen-Lindelof bounds for zeta"};
  app.require_subcommand(1);
  app.set_version_flag("--version", plc_version());

  Common common;
  std::string spec_path;

  auto* certify = app.add_subcommand("certify", "Certify the hypotheses of a job spec");
  certify->add_option("spec", spec_path, "Job spec (JSON)")->required();
  add_common(certify, common);

  auto* constant = app.add_subcommand("constant", "Certify and extract the constants of a job spec");
  constant->add_option("spec", spec_path, "Job spec (JSON)")->required();
  add_common(constant, common);

  auto* table = app.add_subcommand("table", "Tabulate certified constants C(t0) of a job spec");
  table->add_option("spec", spec_path, "Job spec (JSON)")->required();
  add_common(table, common);

  int example = 0;
  auto* reproduce = app.add_subcommand("reproduce", "Run a canned example");
  reproduce->add_option("--example", example, "Example number")->required()->check(CLI::Range(1, 3));
  bool print_spec = false;
  reproduce->add_flag("--print-spec", print_spec, "Print the embedded job spec and exit");
  add_common(reproduce, common);

  std::vector<std::string> point, rect;
  std::string target = "zeta";
  double width = 1e-12;
  auto* zeta = app.add_subcommand("zeta", "Enclose zeta (or f_zeta) at a point or over a rectangle");
  auto* popt = zeta->add_option("--point", point, "sigma t")->expected(2);
  zeta->add_option("--rect", rect, "sigma_lo sigma_hi t_lo t_hi")->expected(4)->excludes(popt);
  zeta->add_option("--target", target, "zeta or f_zeta")->check(CLI::IsMember({"zeta", "f_zeta"}));
  zeta->add_option("--width", width, "Target enclosure width");
  add_common(zeta, common);

  std::vector<std::string> sigma, tr;
  std::string bound, mode = "boundary", sense = "sup", region_target = "f_zeta";
  auto* region = app.add_subcommand("verify-region", "Check sup or inf of |f| over a rectangle");
  region->add_option("spec", spec_path, "Job spec (JSON); otherwise use the flags");
  region->add_option("--sigma", sigma, "sigma_lo sigma_hi")->expected(2);
  region->add_option("--t", tr, "t_lo t_hi")->expected(2);
  region->add_option("--bound", bound, "Bound to check");
  region->add_option("--mode", mode, "boundary or full")->check(CLI::IsMember({"boundary", "full"}));
  region->add_option("--sense", sense, "sup or inf")->check(CLI::IsMember({"sup", "inf"}));
  region->add_option("--target", region_target, "zeta or f_zeta")->check(CLI::IsMember({"zeta", "f_zeta"}));
  add_common(region, common);

  auto* selftest = app.add_subcommand("selftest", "Run quick internal consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  plc_context* ctx = nullptr;
  if (plc_context_new(&ctx) != PLC_OK) {
    std::fprintf(stderr, "plc: cannot create context\n");
    return 2;
  }
  int rc = configure(ctx, common);
  if (rc != 0) {
    plc_context_free(ctx);
    return rc;
  }

  plc_result* r = nullptr;
  plc_status s = PLC_OK;
  if (*certify || *constant || *table) {
    // The spec's own kind decides what runs; the subcommand only guards it.
    char* norm = nullptr;
    std::string text;
    {
      std::FILE* f = std::fopen(spec_path.c_str(), "rb");
      if (!f) {
        std::fprintf(stderr, "plc: cannot open %s\n", spec_path.c_str());
        plc_context_free(ctx);
        return 2;
      }
      char buf[4096];
      std::size_t n;
      while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
      std::fclose(f);
    }
    s = plc_normalize_json(ctx, text.c_str(), &norm);
    if (s != PLC_OK) {
      rc = fail(ctx, s);
      plc_context_free(ctx);
      return rc;
    }
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(norm);
    plc_string_free(norm);
    std::string want = *certify ? "certify" : *constant ? "constant" : "table";
    std::string kind = j["kind"].get<std::string>();
    bool compatible = kind == want || (want == "constant" && kind.rfind("reproduce-", 0) == 0) ||
                      (want == "certify" && kind != "table" && kind != "zeta" && kind != "verify-region");
    if (!compatible) {
      std::fprintf(stderr, "plc: spec kind '%s' does not match subcommand '%s'\n", kind.c_str(), want.c_str());
      plc_context_free(ctx);
      return 2;
    }
    if (want != kind && want == "certify" && kind != "reproduce-example1") j["kind"] = "certify";
    s = plc_run_json(ctx, j.dump().c_str(), &r);
  } else if (*reproduce) {
    if (print_spec) {
      char* text = nullptr;
      s = plc_example_json(ctx, example, &text);
      if (s == PLC_OK) {
        std::fputs(text, stdout);
        plc_string_free(text);
      }
      rc = s == PLC_OK ? 0 : fail(ctx, s);
      plc_context_free(ctx);
      return rc;
    }
    s = plc_run_example(ctx, example, &r);
  } else if (*zeta) {
    if (point.empty() && rect.empty()) {
      std::fprintf(stderr, "plc: zeta needs --point or --rect\n");
      plc_context_free(ctx);
      return 2;
    }
    nlohmann::ordered_json j;
    j["kind"] = "zeta";
    std::vector<std::string> sg = point.empty() ? std::vector<std::string>{rect[0], rect[1]}
                                                : std::vector<std::string>{point[0]};
    std::vector<std::string> tt = point.empty() ? std::vector<std::string>{rect[2], rect[3]}
                                                : std::vector<std::string>{point[1]};
    j["point"] = {{"target", target}, {"sigma", sg}, {"t", tt}, {"width", width}};
    s = plc_run_json(ctx, j.dump().c_str(), &r);
  } else if (*region) {
    if (!spec_path.empty()) {
      s = plc_run_file(ctx, spec_path.c_str(), &r);
    } else {
      if (sigma.size() != 2 || tr.size() != 2 || bound.empty()) {
        std::fprintf(stderr, "plc: verify-region needs a spec or --sigma, --t and --bound\n");
        plc_context_free(ctx);
        return 2;
      }
      nlohmann::ordered_json j;
      j["kind"] = "verify-region";
      j["region"] = {{"target", region_target}, {"sense", sense}, {"sigma", sigma},
                     {"t", tr},                 {"bound", bound}, {"mode", mode}};
      s = plc_run_json(ctx, j.dump().c_str(), &r);
    }
  } else if (*selftest) {
    s = plc_selftest(ctx, &r);
  }
  rc = finish(ctx, s, r, common);
  plc_context_free(ctx);
  return rc;
}
