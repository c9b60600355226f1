// Copyright 2026 The plcert Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plcert/theorem.hpp"

namespace plc {

// Job files are JSON. Numbers that feed the mathematics (strip ends,
// exponents, constants) are strings in the Real grammar so that "5/7" or
// "1.546" are enclosed exactly; heights, budgets and t0 values are JSON
// numbers.

struct FactorSpec {
  std::string name;
  std::string catalog;  // builder name; empty when expr is given
  std::vector<std::string> params;
  std::string expr;  // prefix form
  std::string alpha = "0";
  std::string beta = "0";
  std::string display;
  std::optional<std::string> upper_growth;
};

struct ComparisonSpec {
  std::size_t factor = 0;
  double t_from = 3.0;
};

struct BoundarySpec {
  std::string attested;
  std::string citation;
  bool pole_factor = false;
  double verify_to = 0.0;
  std::vector<ComparisonSpec> comparisons;
};

struct GrowthSpec {
  std::string C1 = "1";
  std::string C2 = "1";
  std::string C3 = "1";
  std::string statement;
};

struct RatioPartSpec {
  std::string kind;  // pole, linear, symlog
  std::optional<std::size_t> factor;  // symlog: index into factors
  std::string shift = "0";            // linear
  std::string alpha = "1";
  std::string beta = "1";
};

struct RatioSpecText {
  std::vector<RatioPartSpec> parts;
  std::string denominator;
};

struct TargetSpec {
  double t0 = 0.0;
  std::string bound;  // upper bound for the constant, e.g. "1+2.4e-8"
  bool required = true;
};

// Example 1 style family: one certificate per (factor, eta).
struct FamilyEntry {
  FactorSpec factor;
  double T0 = 3.0;
  double t_from = 3.0;
  std::string literature;
  std::string citation;
};

struct OutputSpec {
  std::string certificate;
  std::string report;
  std::string csv;
  std::string events;
};

struct PointSpec {
  std::string target = "zeta";
  std::string sigma_lo, sigma_hi, t_lo, t_hi;
  double width = 1e-12;
};

struct RegionSpec {
  std::string target = "f_zeta";
  std::string sense = "sup";  // sup or inf
  std::string sigma_lo, sigma_hi, t_lo, t_hi;
  std::string bound;
  std::string mode = "boundary";  // boundary or full
};

struct JobSpec {
  std::string schema = kSchemaVersion;
  // certify, constant, table, reproduce-example1, reproduce-example2,
  // reproduce-example3, zeta, verify-region
  std::string kind;
  std::string label;
  std::string note;
  std::string a, b;
  std::string f = "f_zeta";
  std::vector<FactorSpec> factors;
  double T0 = 0.0;
  double T_cap = 100.0;
  std::optional<double> T_max;
  GrowthSpec growth;
  BoundarySpec at_a, at_b;
  std::vector<std::string> attestations;
  std::optional<RatioSpecText> ratio;
  std::vector<TargetSpec> targets;
  std::vector<std::string> eta;
  std::vector<FamilyEntry> family;
  std::string exponent_check;  // expected exponent of t in the final bound
  std::size_t budget = 1000000;
  std::size_t constant_budget = 400000;
  std::vector<double> csv_t;
  int csv_sigma_steps = 10;
  OutputSpec outputs;
  std::optional<PointSpec> point;
  std::optional<RegionSpec> region;
};

// Parses and validates. Throws SchemaError (JSON pointer in path()) or
// ParseError.
JobSpec parse_jobspec(const std::string& text);
JobSpec load_jobspec(const std::string& path);
// Normalized JSON text: fixed key order, defaults written out.
std::string serialize(const JobSpec& j);

Factor build_factor(const FactorSpec& fs, const Real& a, const Real& b, const std::string& path);
StripHypotheses to_hypotheses(const JobSpec& j);
RatioSpec to_ratio(const JobSpec& j, const StripHypotheses& h);

std::string interval_text(const RealInterval& v);
std::string certificate_json(const Certificate& c, const std::string& extra_json = {});
std::string bound_csv(const Certificate& c, const std::vector<double>& ts, int sigma_steps);

// Writes through a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

// ---- running jobs ---------------------------------------------------------------

struct ReportRow {
  std::string label;
  std::string upper;   // certified upper bound
  std::string target;  // bound to beat
  bool pass = false;
  std::string verdict;  // pass, fail, inconclusive
  double seconds = 0.0;
  std::size_t boxes = 0;
};

struct RunOptions {
  std::optional<std::size_t> budget;
  std::optional<double> T_cap;
  std::vector<std::string> eta;
  std::vector<double> t0;
  OutputSpec outputs;  // non-empty fields override the spec
  std::function<void(const std::string&)> events;
};

struct RunOutput {
  int exit_code = 1;
  std::string report;
  std::string certificate;  // JSON; an array for families
  std::string csv;
  std::vector<ReportRow> rows;
};

RunOutput run_job(const JobSpec& j, const RunOptions& ro = {});

// Canned example job (1, 2 or 3) from the embedded data files.
JobSpec example_job(int n);
const std::map<std::string, std::string>& example_data();

}  // namespace plc
