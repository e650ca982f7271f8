// congruence-lab: run the verification suite, print the sequence families it
// is built on, cross-check the enumeration oracles against the formula
// engines, sweep the exact identities, and compute two-squares
// representations.  Exit codes: 0 success, 1 a verified statement failed,
// 2 usage or precondition error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "conglab/arith.hpp"
#include "conglab/cache.hpp"
#include "conglab/checks.hpp"
#include "conglab/error.hpp"
#include "conglab/identities.hpp"
#include "conglab/oracles.hpp"
#include "conglab/sequences.hpp"
#include "conglab/store.hpp"

namespace {

using conglab::Error;
using conglab::Int;
using conglab::Rat;
using conglab::Residue;

int usage_error(const std::string& message) {
  std::cerr << "congruence-lab: " << message << "\n";
  return 2;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& s : parts) {
    if (!out.empty()) out += " ";
    out += s;
  }
  return out;
}

std::vector<std::string> to_strings(const std::vector<Int>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Int& v : values) out.push_back(v.get_str());
  return out;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyFlags {
  std::vector<std::string> suite;
  std::vector<std::string> checks;
  uint64_t pmin = 0;
  uint64_t pmax = 0;
  std::string mod_exp;
  int jobs = 0;
  std::string format;
  std::string out;
  std::string cache_dir;
  std::string config_path;
  int max_n = -1;
  int series_order = -1;
};

// defaults < CONGRUENCE_LAB_CACHE < config file < flags
int apply_config_file(const std::string& path, conglab::SuiteConfig& cfg) {
  std::ifstream in(path);
  if (!in) return usage_error("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    return usage_error("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) return usage_error("config file must hold a JSON object");
  std::vector<std::string> selection;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = it.key();
    try {
      if (key == "suite" || key == "checks") {
        for (const auto& tok : it.value()) selection.push_back(tok.get<std::string>());
      } else if (key == "pmin") {
        cfg.pmin = it.value().get<uint64_t>();
      } else if (key == "pmax") {
        cfg.pmax = it.value().get<uint64_t>();
      } else if (key == "mod_exp" || key == "mod-exp") {
        cfg.mod_exp = it.value().get<std::string>();
      } else if (key == "jobs") {
        cfg.jobs = it.value().get<int>();
      } else if (key == "format") {
        cfg.format = it.value().get<std::string>();
      } else if (key == "out") {
        cfg.out = it.value().get<std::string>();
      } else if (key == "cache_dir" || key == "cache-dir") {
        cfg.cache_dir = it.value().get<std::string>();
      } else if (key == "max_n" || key == "max-n") {
        cfg.identity_max_n = it.value().get<int>();
      } else if (key == "series_order" || key == "series-order") {
        cfg.series_order = it.value().get<int>();
      } else {
        return usage_error("config file has unknown key \"" + key + "\"");
      }
    } catch (const std::exception& e) {
      return usage_error("config key \"" + key + "\": " + e.what());
    }
  }
  if (!selection.empty()) cfg.selection = selection;
  return 0;
}

int cmd_verify(const VerifyFlags& flags, const CLI::App& sub) {
  conglab::SuiteConfig cfg;
  if (const char* env = std::getenv("CONGRUENCE_LAB_CACHE"); env && *env) cfg.cache_dir = env;
  if (sub.count("--config")) {
    if (int rc = apply_config_file(flags.config_path, cfg)) return rc;
  }
  if (sub.count("--suite") || sub.count("--checks")) {
    cfg.selection.clear();
    cfg.selection.insert(cfg.selection.end(), flags.suite.begin(), flags.suite.end());
    cfg.selection.insert(cfg.selection.end(), flags.checks.begin(), flags.checks.end());
  }
  if (sub.count("--pmin")) cfg.pmin = flags.pmin;
  if (sub.count("--pmax")) cfg.pmax = flags.pmax;
  if (sub.count("--mod-exp")) cfg.mod_exp = flags.mod_exp;
  if (sub.count("--jobs")) cfg.jobs = flags.jobs;
  if (sub.count("--format")) cfg.format = flags.format;
  if (sub.count("--out")) cfg.out = flags.out;
  if (sub.count("--cache-dir")) cfg.cache_dir = flags.cache_dir;
  if (sub.count("--max-n")) cfg.identity_max_n = flags.max_n;
  if (sub.count("--series-order")) cfg.series_order = flags.series_order;

  if (cfg.pmin < 5) return usage_error("--pmin must be at least 5");
  if (cfg.pmax < cfg.pmin) return usage_error("--pmax must be at least --pmin");
  if (cfg.jobs < 1) return usage_error("--jobs must be at least 1");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "md")
    return usage_error("--format must be one of json, csv, md");
  if (cfg.mod_exp != "auto" && cfg.mod_exp != "1" && cfg.mod_exp != "2" && cfg.mod_exp != "3")
    return usage_error("--mod-exp must be one of auto, 1, 2, 3");
  if (cfg.identity_max_n < 0) return usage_error("--max-n must be nonnegative");
  if (cfg.series_order < 2) return usage_error("--series-order must be at least 2");

  conglab::seq::SequenceStore store;
  if (!cfg.cache_dir.empty())
    store.attach_cache(std::make_shared<conglab::ResidueCache>(cfg.cache_dir));

  conglab::Report report;
  try {
    report = conglab::run_suite(cfg, store);
  } catch (const Error& e) {
    return usage_error(e.what());
  }

  std::string body;
  if (cfg.format == "json") body = conglab::report_to_json(report);
  else if (cfg.format == "csv") body = conglab::report_to_csv(report);
  else body = conglab::report_to_markdown(report);

  if (cfg.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(cfg.out);
    if (!out) return usage_error("cannot write to " + cfg.out);
    out << body;
  }
  std::cerr << "congruence-lab: PASS " << report.summary.at("PASS") << "  FAIL "
            << report.summary.at("FAIL") << "  SKIP " << report.summary.at("SKIP")
            << "  DISCREPANCY " << report.summary.at("DISCREPANCY") << "  ("
            << report.duration_ms << " ms)\n";
  return report.summary.at("FAIL") > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// seq
// ---------------------------------------------------------------------------

int cmd_seq(const std::string& family, int row_n, int max, std::optional<uint64_t> mod,
            const CLI::App& sub) {
  namespace seq = conglab::seq;
  std::vector<std::string> parts;
  try {
    if (family == "eulerian") {
      if (!sub.count("--n")) return usage_error("seq eulerian needs --n (the row index)");
      if (row_n < 1) return usage_error("--n must be at least 1");
      if (mod) {
        for (uint64_t v : seq::eulerian_row_mod(row_n, *mod)) parts.push_back(std::to_string(v));
      } else {
        parts = to_strings(seq::eulerian_row(row_n));
      }
    } else if (family == "euler" || family == "ehat" || family == "genocchi" ||
               family == "tangent" || family == "zigzag" || family == "bernoulli") {
      if (max < 0) return usage_error("--max must be nonnegative");
      std::vector<std::string> exact;
      if (family == "euler") {
        for (int n = 0; n <= max; ++n) exact.push_back(seq::euler_number(n).get_str());
      } else if (family == "ehat") {
        for (int n = 0; n <= max; ++n) exact.push_back(seq::generalized_euler(n).get_str());
      } else if (family == "genocchi") {
        for (int n = 1; n <= max; ++n) exact.push_back(seq::genocchi_number(n).get_str());
      } else if (family == "tangent") {
        for (int n = 1; n <= max; n += 2) exact.push_back(seq::tangent_number(n).get_str());
      } else if (family == "zigzag") {
        parts.clear();
        for (const Int& v : seq::zigzag(max)) exact.push_back(v.get_str());
      } else { // bernoulli
        const std::vector<Rat> b = seq::bernoulli_exact(max);
        for (const Rat& v : b) exact.push_back(v.get_str());
      }
      if (mod) {
        for (const std::string& s : exact) {
          const Residue r = family == "bernoulli" ? Residue::reduce(Rat(s), *mod)
                                                  : Residue::reduce(Int(s), *mod);
          parts.push_back(std::to_string(r.value()));
        }
      } else {
        parts = exact;
      }
    } else {
      return usage_error("unknown family \"" + family +
                         "\" (expected eulerian, euler, genocchi, tangent, zigzag, bernoulli, ehat)");
    }
  } catch (const Error& e) {
    return usage_error(e.what());
  }
  std::cout << join(parts) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// oracle
// ---------------------------------------------------------------------------

int cmd_oracle(const std::string& family, int n, int i) {
  namespace seq = conglab::seq;
  namespace oracle = conglab::oracle;
  try {
    std::vector<Int> counted, engine;
    if (family == "ascents") {
      counted = oracle::ascent_distribution(n);
      engine = seq::eulerian_row(n);
    } else if (family == "alternating") {
      counted = {oracle::alternating_count(n)};
      engine = {seq::zigzag(n).back()};
    } else if (family == "dumont") {
      counted = {oracle::dumont_count(n)};
      engine = {abs(seq::genocchi_number(2 * n))};
    } else if (family == "guns") {
      counted = {oracle::gun_count(n)};
      engine = {abs(seq::genocchi_number(2 * n))};
    } else if (family == "newcomb") {
      counted = oracle::newcomb_distribution(n);
      engine = seq::eulerian_row(n);
    } else if (family == "words") {
      counted = oracle::multiset_descent_distribution(n, i);
      engine = seq::generalized_eulerian_row(n, i);
    } else {
      return usage_error("unknown oracle \"" + family +
                         "\" (expected ascents, alternating, dumont, guns, newcomb, words)");
    }
    const bool ok = counted == engine;
    if (counted.size() == 1)
      std::cout << counted[0].get_str() << " " << engine[0].get_str() << (ok ? " OK" : " MISMATCH")
                << "\n";
    else
      std::cout << join(to_strings(counted)) << " | " << join(to_strings(engine))
                << (ok ? " OK" : " MISMATCH") << "\n";
    return ok ? 0 : 1;
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

// ---------------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------------

int cmd_identities(int max_n, int series_order) {
  namespace seq = conglab::seq;
  if (max_n < 0) return usage_error("--max-n must be nonnegative");
  if (series_order < 2) return usage_error("--series-order must be at least 2");
  seq::IdentityOptions opt;
  opt.max_n = max_n;
  opt.series_order = series_order;
  bool failed = false;
  for (const std::string& id : seq::identity_ids()) {
    const seq::IdentityResult res = seq::verify_identity(id, opt);
    const char* status = res.flagged ? "DISCREPANCY" : (res.holds ? "PASS" : "FAIL");
    if (!res.flagged && !res.holds) failed = true;
    std::cout << id << " " << status << " " << seq::identity_title(id);
    if (res.flagged || !res.holds)
      std::cout << " | lhs=" << res.lhs << " rhs=" << res.rhs << " | " << res.note;
    std::cout << "\n";
  }
  return failed ? 1 : 0;
}

// ---------------------------------------------------------------------------
// represent
// ---------------------------------------------------------------------------

int cmd_represent(uint64_t p) {
  if (!conglab::is_prime_u64(p) || p % 4 != 1)
    return usage_error(std::to_string(p) + " is not a prime congruent to 1 mod 4");
  try {
    const auto [a, b] = conglab::represent_a2_plus_4b2(p);
    std::cout << a << " " << b << "\n";
    return 0;
  } catch (const Error& e) {
    return usage_error(e.what());
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification laboratory for Eulerian, Euler, Genocchi and Bernoulli congruences"};
  app.require_subcommand(1);

  VerifyFlags vf;
  CLI::App* verify = app.add_subcommand("verify", "run the congruence suite and emit a report");
  verify->add_option("--suite", vf.suite,
                     "groups or check ids (all, harmonic, euler, genocchi, periodicity, "
                     "identities, oracles, C01, ...)")
      ->delimiter(',');
  verify->add_option("--checks", vf.checks, "explicit check ids")->delimiter(',');
  verify->add_option("--pmin", vf.pmin, "smallest prime (>= 5)");
  verify->add_option("--pmax", vf.pmax, "largest prime");
  verify->add_option("--mod-exp", vf.mod_exp, "parametric-exponent policy: auto, 1, 2 or 3");
  verify->add_option("--jobs", vf.jobs, "worker threads");
  verify->add_option("--format", vf.format, "report format: json, csv or md");
  verify->add_option("--out", vf.out, "write the report to this path (default stdout)");
  verify->add_option("--cache-dir", vf.cache_dir, "residue-table disk cache directory");
  verify->add_option("--config", vf.config_path, "JSON config file (flags override it)");
  verify->add_option("--max-n", vf.max_n, "identity sweep bound (0 = per-identity caps)");
  verify->add_option("--series-order", vf.series_order, "power-series truncation order");

  std::string seq_family;
  int seq_n = 0, seq_max = 12;
  std::optional<uint64_t> seq_mod;
  CLI::App* seqc = app.add_subcommand("seq", "print a sequence family");
  seqc->add_option("family", seq_family,
                   "eulerian, euler, genocchi, tangent, zigzag, bernoulli or ehat")
      ->required();
  seqc->add_option("--n", seq_n, "row index (eulerian)");
  seqc->add_option("--max", seq_max, "largest index to print");
  seqc->add_option("--mod", seq_mod, "reduce values modulo this");

  std::string oracle_family;
  int oracle_n = 0, oracle_i = 1;
  CLI::App* oraclec = app.add_subcommand("oracle", "enumerate and compare against the engines");
  oraclec->add_option("family", oracle_family,
                      "ascents, alternating, dumont, guns, newcomb or words")
      ->required();
  oraclec->add_option("--n", oracle_n, "size")->required();
  oraclec->add_option("--i", oracle_i, "copies per letter (words)");

  int id_max_n = 0, id_series_order = 16;
  CLI::App* identitiesc = app.add_subcommand("identities", "sweep the exact identities");
  identitiesc->add_option("--max-n", id_max_n, "sweep bound (0 = per-identity caps)");
  identitiesc->add_option("--series-order", id_series_order, "power-series truncation order");

  uint64_t rep_p = 0;
  CLI::App* representc = app.add_subcommand("represent", "write p = a^2 + 4b^2");
  representc->add_option("p", rep_p, "prime congruent to 1 mod 4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (verify->parsed()) return cmd_verify(vf, *verify);
  if (seqc->parsed()) return cmd_seq(seq_family, seq_n, seq_max, seq_mod, *seqc);
  if (oraclec->parsed()) return cmd_oracle(oracle_family, oracle_n, oracle_i);
  if (identitiesc->parsed()) return cmd_identities(id_max_n, id_series_order);
  if (representc->parsed()) return cmd_represent(rep_p);
  return 2;
}
