#pragma once

// The verification registry: one entry per congruence, identity bundle or
// enumerative cross-check, an evaluator that turns (entry, point, params)
// into a result row, and a suite driver that expands selections into rows,
// fans them over a worker pool and folds a deterministic report.
//
// Statuses: PASS / FAIL are what they sound like for entries expected to
// hold.  Entries (or single parameter rows) that are known not to hold as
// stated are "flagged": they always report DISCREPANCY with both sides
// printed, never PASS — the suite stays green while still showing exactly
// where the source material and the computation part ways.  SKIP marks rows
// that could not be evaluated (hypothesis not met, table caps, non-unit
// denominators) and carries the reason.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conglab/store.hpp"

namespace conglab {

enum class Status { Pass, Fail, Skip, Discrepancy };
const char* status_name(Status s);

// small named integers attached to a row, e.g. {k: 3} or {a: 2, k: 1}
using Params = std::map<std::string, long long>;

struct CheckResult {
  std::string check;
  uint64_t p = 0; // prime, odd modulus (C24), or 0 for point-free entries
  Params params;
  std::string modulus; // decimal p^e, or "exact"
  std::string lhs, rhs;
  Status status = Status::Skip;
  std::string note;
};

struct SuiteConfig {
  std::vector<std::string> selection = {"all"};
  uint64_t pmin = 5;
  uint64_t pmax = 997;
  std::string mod_exp = "auto"; // auto | 1 | 2 | 3; narrows the parametric-exponent rows
  int jobs = 1;
  std::string format = "json"; // json | csv | md
  std::string out;             // empty = stdout
  std::string cache_dir;       // empty = no disk cache
  int identity_max_n = 0;      // 0 = per-identity caps
  int series_order = 16;
};

struct Report {
  std::string tool = "congruence-lab";
  std::string version;
  SuiteConfig config;
  std::vector<std::string> resolved_checks;
  std::vector<CheckResult> results;
  std::map<std::string, long> summary; // always carries all four statuses
  long duration_ms = 0;
};

// ids in registry order (C01..C39 with C04L, then I.., then O..)
std::vector<std::string> check_ids();
std::vector<std::string> group_names();
// expands group names / explicit ids into registry order; UnknownCheck on bad names
std::vector<std::string> resolve_selection(const std::vector<std::string>& selection);
std::string check_title(const std::string& id);

// All rows of one entry at one point (prime / odd modulus / 0), with
// per-row error capture: arithmetic errors become SKIP rows, never throws
// for registered ids.
std::vector<CheckResult> evaluate_check(const std::string& id, uint64_t p,
                                        seq::SequenceStore& store, const SuiteConfig& cfg);

Report run_suite(const SuiteConfig& cfg, seq::SequenceStore& store);

std::string report_to_json(const Report& report);
std::string report_to_csv(const Report& report);
std::string report_to_markdown(const Report& report);

} // namespace conglab
