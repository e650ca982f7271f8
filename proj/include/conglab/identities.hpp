#pragma once

// Exact-identity registry: every entry sweeps a family of instances over
// integer (or rational) carriers and reports whether all of them hold.
// Two entries are flagged: they fail as stated at their smallest instances,
// the failure is reproducible, and the result deliberately surfaces the
// first failing instance instead of hiding it.

#include <string>
#include <vector>

namespace conglab::seq {

struct IdentityOptions {
  int max_n = 0;        // 0 = per-identity default caps; otherwise clamps every n sweep
  int series_order = 16; // truncation order for the series-backed entries
};

struct IdentityResult {
  bool holds = false;
  bool flagged = false;   // known-discrepant as transcribed; never counted as a failure
  std::string lhs, rhs;   // equal sides of the last instance, or the first differing pair
  long instances = 0;     // instances evaluated
  std::string note;       // where a mismatch happened / sweep description
};

// ids in registry order: I01..I22 with I21 split into I21a / I21b
std::vector<std::string> identity_ids();

// one-line description; UnknownIdentity for bad ids
std::string identity_title(const std::string& id);

IdentityResult verify_identity(const std::string& id, const IdentityOptions& opt = {});

} // namespace conglab::seq
