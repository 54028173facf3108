#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kc/fiber/fiber.hpp"
#include "kc/lie/lie.hpp"
#include "kc/suite/suite.hpp"
#include "kc/thresholds/thresholds.hpp"

namespace {

using nlohmann::json;

constexpr int kUsageError = 2;
constexpr int kPartialFailure = 1;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output of one command: certificates, optional table rows and a CSV projection.
struct Report {
  std::string command;
  json params = json::object();
  std::vector<kc::Certificate> certificates;
  json rows = json::array();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  bool all_hold() const {
    for (const auto& c : certificates)
      if (!c.holds()) return false;
    return true;
  }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_csv(const Report& r) {
  std::ostringstream os;
  std::vector<std::string> header = r.csv_header;
  std::vector<std::vector<std::string>> rows = r.csv_rows;
  if (header.empty()) {
    header = {"claim_id", "verdict", "precision_bits", "seed", "params"};
    for (const auto& c : r.certificates)
      rows.push_back({c.claim_id, kc::to_string(c.verdict), std::to_string(c.precision_bits), std::to_string(c.seed),
                      c.params.dump()});
  }
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_field(header[i]);
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\n";
  }
  return os.str();
}

std::string render_json(const Report& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(kc::to_json(c));
  json out{{"schema", 1}, {"command", r.command}, {"params", r.params}, {"all_hold", r.all_hold()},
           {"certificates", certs}};
  if (!r.rows.empty()) out["rows"] = r.rows;
  return out.dump(2) + "\n";
}

json scalar(const kc::numeric::ExactScalar& x) { return {{"decimal", x.to_decimal(12)}, {"exact", x.to_string()}}; }

void require_even(int n, const char* name, int min) {
  if (n < min || n % 2 != 0) throw UsageError(std::string(name) + " must be even and >= " + std::to_string(min));
}

// ---- commands ----

Report thresholds_table(int m_min, int m_max, int workers) {
  require_even(m_min, "--m-min", 6);
  if (m_max < m_min) throw UsageError("--m-max must be >= --m-min");
  Report r;
  r.command = "thresholds table";
  r.params = {{"m_min", m_min}, {"m_max", m_max}};
  const kc::thresholds::ThresholdTable t = kc::thresholds::verify_threshold_table(m_min, m_max, workers);
  r.certificates.push_back(t.certificate);
  r.csv_header = {"m", "n", "lambda1", "lambda2", "lambda3", "lambda0", "lambda", "lambda_exact", "dominant",
                  "verdict"};
  for (const auto& row : t.rows) {
    r.rows.push_back({{"m", row.m},
                      {"n", row.n},
                      {"lambda1", scalar(row.lambda1)},
                      {"lambda2", scalar(row.lambda2)},
                      {"lambda3", scalar(row.lambda3)},
                      {"lambda0", scalar(row.lambda0)},
                      {"lambda", scalar(row.lambda_final)},
                      {"dominant", row.dominant},
                      {"verdict", kc::to_string(row.verdict)}});
    r.csv_rows.push_back({std::to_string(row.m), std::to_string(row.n), row.lambda1.to_decimal(12),
                          row.lambda2.to_decimal(12), row.lambda3.to_decimal(12), row.lambda0.to_decimal(12),
                          row.lambda_final.to_decimal(12), row.lambda_final.to_string(), row.dominant,
                          kc::to_string(row.verdict)});
  }
  return r;
}

Report thresholds_verify(const std::string& claim, int n_min, int n_max, int m_min, int m_max, int k_max,
                         int workers) {
  Report r;
  r.command = "thresholds verify";
  r.params = {{"claim", claim}, {"n_min", n_min}, {"n_max", n_max}};
  if (n_max < n_min) throw UsageError("--n-max must be >= --n-min");
  namespace th = kc::thresholds;
  if (claim == "chain") {
    r.certificates.push_back(th::verify_chain(n_min, n_max));
  } else if (claim == "monotone") {
    require_even(n_min, "--n-min", 4);
    r.params["k_max"] = k_max;
    for (int n = n_min; n <= n_max; n += 2) r.certificates.push_back(th::verify_monotonicity(n, k_max));
  } else if (claim == "lambda0") {
    r.params["m_min"] = m_min;
    r.params["m_max"] = m_max;
    require_even(m_min, "--m-min", 6);
    r.certificates.push_back(th::verify_threshold_table(m_min, m_max, workers).certificate);
  } else if (claim == "gamma-bracket") {
    r.certificates.push_back(th::verify_gamma_bracket(n_max));
  } else if (claim == "roots") {
    require_even(n_min, "--n-min", 4);
    r.params["k_max"] = k_max;
    r.certificates.push_back(th::verify_roots(n_min, n_max, 2, k_max));
  } else if (claim == "side-claims") {
    r.certificates.push_back(th::verify_side_claims());
  } else if (claim == "final") {
    r.params["m_min"] = m_min;
    r.params["m_max"] = m_max;
    r.certificates.push_back(th::verify_final_constants(m_min, m_max));
  } else if (claim == "rank-ratio") {
    r.certificates.push_back(th::verify_rank_ratio_bound(n_max));
  } else {
    throw UsageError("unknown claim: " + claim);
  }
  return r;
}

Report curvature_bg(int n, double lambda, int trials, int restarts, std::uint64_t seed, double tol, int workers) {
  require_even(n, "--n", 4);
  if (lambda <= 2.0 / 3.0 || lambda > 1.0) throw UsageError("--lambda must lie in (2/3, 1]");
  if (trials < 1 || restarts < 1) throw UsageError("--trials and --restarts must be positive");
  Report r;
  r.command = "curvature bishop-goldberg";
  r.params = {{"n", n}, {"lambda", lambda}, {"trials", trials}, {"restarts", restarts}, {"seed", seed}, {"tol", tol}};
  r.certificates.push_back(kc::suite::curvature_batch(n, lambda, trials, restarts, tol, seed, workers));
  r.certificates.push_back(kc::suite::exact_g_holomorphic(n, 20, seed));
  return r;
}

Report fiber_verify(const std::string& lemma, int n, int k, int trials, std::uint64_t seed, int workers) {
  kc::suite::FiberCheck check;
  try {
    check = kc::suite::fiber_check_from_string(lemma);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  require_even(n, "--n", 4);
  if (n > kc::fiber::kMaxVars) throw UsageError("--n must be <= 12");
  if (k < 0) throw UsageError("--k must be >= 0");
  if (trials < 1) throw UsageError("--trials must be positive");
  Report r;
  r.command = "fiber verify";
  r.params = {{"check", kc::suite::to_string(check)}, {"n", n}, {"k", k}, {"trials", trials}, {"seed", seed}};
  r.certificates.push_back(kc::suite::fiber_batch(check, n, k, trials, seed, workers));
  return r;
}

Report lie_exclusion(long p_max) {
  if (p_max < 13) throw UsageError("--p-max must be >= 13");
  Report r;
  r.command = "lie exclusion";
  r.params = {{"p_max", p_max}};
  const kc::lie::ExclusionTable t = kc::lie::enumerate_exclusion_table(p_max);
  r.certificates.push_back(t.cert);
  r.csv_header = {"algebra", "highest_weight", "dimension", "p", "rho", "required", "survives"};
  for (const auto& row : t.candidates) {
    r.rows.push_back({{"algebra", kc::lie::to_string(row.irrep.algebra)},
                      {"highest_weight", row.irrep.highest},
                      {"dimension", row.irrep.dimension.get_str()},
                      {"p", row.p},
                      {"rho", row.rho},
                      {"required", row.required},
                      {"survives", row.survives}});
    r.csv_rows.push_back({kc::lie::to_string(row.irrep.algebra), kc::lie::weight_to_string(row.irrep.highest),
                          row.irrep.dimension.get_str(), std::to_string(row.p), std::to_string(row.rho),
                          std::to_string(row.required), row.survives ? "true" : "false"});
  }
  return r;
}

Report lie_e6_cubic() {
  Report r;
  r.command = "lie e6-cubic";
  const kc::lie::CubicInvariantReport rep = kc::lie::e6_cubic_report();
  r.certificates.push_back(rep.cert);
  r.csv_header = {"power", "highest_weight", "dimension", "multiplicity"};
  const kc::lie::WeightLattice e6(kc::lie::Algebra::e6);
  for (const auto& [power, dec] : {std::pair{2, &rep.square}, std::pair{3, &rep.cube}})
    for (const auto& [w, m] : *dec) {
      r.rows.push_back({{"power", power},
                        {"highest_weight", w},
                        {"dimension", kc::lie::weyl_dimension(e6, w).get_str()},
                        {"multiplicity", m.get_str()}});
      r.csv_rows.push_back({std::to_string(power), kc::lie::weight_to_string(w),
                            kc::lie::weyl_dimension(e6, w).get_str(), m.get_str()});
    }
  r.params = {{"trivial_in_cube", rep.trivial_in_cube.get_str()}};
  return r;
}

Report lie_rh(long n_max) {
  if (n_max < 1) throw UsageError("--n-max must be >= 1");
  Report r;
  r.command = "lie rh";
  r.params = {{"n_max", n_max}};
  r.csv_header = {"n", "rho"};
  for (long n = 1; n <= n_max; ++n) {
    const long rho = kc::lie::radon_hurwitz(n);
    r.rows.push_back({n, rho});
    r.csv_rows.push_back({std::to_string(n), std::to_string(rho)});
  }
  return r;
}

Report run_all(bool quick, std::uint64_t seed, int workers) {
  Report r;
  r.command = "all";
  r.params = {{"quick", quick}, {"seed", seed}};
  kc::suite::SuiteConfig cfg;
  cfg.quick = quick;
  cfg.seed = seed;
  cfg.workers = workers;
  r.csv_header = {"criterion", "title", "pass"};
  for (int id = 1; id <= kc::suite::kCriterionCount; ++id) {
    const kc::suite::CriterionResult c = kc::suite::criterion(id, cfg);
    std::fprintf(stderr, "[%s] criterion %d: %s\n", c.pass ? "PASS" : "FAIL", id, c.title.c_str());
    json entry = kc::suite::to_json(c);
    entry.erase("certificates");
    r.rows.push_back(entry);
    r.csv_rows.push_back({std::to_string(id), c.title, c.pass ? "true" : "false"});
    for (const auto& cert : c.certificates) r.certificates.push_back(cert);
    if (!c.pass && c.certificates.size() > 0 && r.all_hold()) {
      // a criterion can fail on its time budget alone; surface that as a failing certificate
      kc::Certificate budget;
      budget.claim_id = "suite.time_budget";
      budget.anchor = "runtime limit of an acceptance criterion";
      budget.params = {{"criterion", id}};
      budget.fail("criterion exceeded its time budget", {{"budget_ms", c.budget_ms}});
      r.certificates.push_back(budget);
    }
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificate-producing checks for pinching constants, curvature bounds, fiber identities and Lie data"};
  // global options are also accepted after the subcommand
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "auto";
  std::string out_path;
  int workers = kc::suite::default_workers();
  app.add_option("--format", format, "json or csv (tables default to csv, everything else to json)")
      ->check(CLI::IsMember({"auto", "json", "csv"}));
  app.add_option("--out", out_path, "write the report to this file instead of standard output");
  app.add_option("--workers", workers, "worker threads (default from KC_WORKERS)")->check(CLI::PositiveNumber);

  auto* th = app.add_subcommand("thresholds", "pinching threshold constants");
  th->require_subcommand(1);
  int m_min = 6, m_max = 100;
  auto* th_table = th->add_subcommand("table", "threshold rows for even m");
  th_table->add_option("--m-min", m_min);
  th_table->add_option("--m-max", m_max);
  th_table->add_option("--format", format)->check(CLI::IsMember({"auto", "json", "csv"}));

  std::string claim;
  int n_min = 10, n_max = 1000, k_max = 200, vm_min = 6, vm_max = 200;
  auto* th_verify = th->add_subcommand("verify", "certify a threshold claim");
  th_verify->add_option("--claim", claim)
      ->required()
      ->check(CLI::IsMember({"chain", "monotone", "lambda0", "gamma-bracket", "roots", "side-claims", "final",
                             "rank-ratio"}));
  th_verify->add_option("--n-min", n_min);
  th_verify->add_option("--n-max", n_max);
  th_verify->add_option("--m-min", vm_min);
  th_verify->add_option("--m-max", vm_max);
  th_verify->add_option("--k-max", k_max);
  th_verify->add_option("--format", format)->check(CLI::IsMember({"auto", "json", "csv"}));

  auto* cu = app.add_subcommand("curvature", "pinched Kahler curvature tensors");
  cu->require_subcommand(1);
  int cn = 8, trials = 20, restarts = 64;
  double lambda = 0.95, tol = 1e-7;
  std::uint64_t seed = 1;
  auto* cu_bg = cu->add_subcommand("bishop-goldberg", "sectional bounds on generated tensors");
  cu_bg->add_option("--n", cn);
  cu_bg->add_option("--lambda", lambda);
  cu_bg->add_option("--trials", trials);
  cu_bg->add_option("--restarts", restarts);
  cu_bg->add_option("--seed", seed);
  cu_bg->add_option("--tol", tol);
  cu_bg->add_option("--format", format)->check(CLI::IsMember({"auto", "json", "csv"}));

  auto* fi = app.add_subcommand("fiber", "exact identities on sphere bundles");
  fi->require_subcommand(1);
  std::string lemma;
  int fn = 8, fk = 2, ftrials = 20;
  auto* fi_verify = fi->add_subcommand("verify", "check one identity or bound");
  fi_verify->add_option("--lemma,--check", lemma,
                        "tangent-identity|sym2-identity|projector-ratio|pairing-bound (aliases 4.3i|4.3ii|5.4norm|4.1)")
      ->required();
  fi_verify->add_option("--n", fn);
  fi_verify->add_option("--k", fk);
  fi_verify->add_option("--trials", ftrials);
  fi_verify->add_option("--seed", seed);
  fi_verify->add_option("--format", format)->check(CLI::IsMember({"auto", "json", "csv"}));

  auto* li = app.add_subcommand("lie", "exceptional Lie algebra arithmetic");
  li->require_subcommand(1);
  long p_max = 20, rh_max = 100;
  auto* li_ex = li->add_subcommand("exclusion", "odd irreps against the vector-field bound");
  li_ex->add_option("--p-max", p_max);
  li_ex->add_option("--format", format)->check(CLI::IsMember({"auto", "json", "csv"}));
  auto* li_cubic = li->add_subcommand("e6-cubic", "invariants in the symmetric square and cube of the 27");
  li_cubic->add_option("--format", format)->check(CLI::IsMember({"auto", "json", "csv"}));
  auto* li_rh = li->add_subcommand("rh", "Radon-Hurwitz numbers");
  li_rh->add_option("--n-max", rh_max);
  li_rh->add_option("--format", format)->check(CLI::IsMember({"auto", "json", "csv"}));

  auto* all = app.add_subcommand("all", "acceptance suite");
  bool quick = false;
  std::uint64_t all_seed = 20240611;
  all->add_flag("--quick", quick, "acceptance sizes");
  all->add_option("--seed", all_seed);
  all->add_option("--format", format)->check(CLI::IsMember({"auto", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  Report report;
  bool tabular = false;
  try {
    if (*th_table) {
      report = thresholds_table(m_min, m_max, workers);
      tabular = true;
    } else if (*th_verify) {
      report = thresholds_verify(claim, n_min, n_max, vm_min, vm_max, k_max, workers);
    } else if (*cu_bg) {
      report = curvature_bg(cn, lambda, trials, restarts, seed, tol, workers);
    } else if (*fi_verify) {
      report = fiber_verify(lemma, fn, fk, ftrials, seed, workers);
    } else if (*li_ex) {
      report = lie_exclusion(p_max);
    } else if (*li_cubic) {
      report = lie_e6_cubic();
    } else if (*li_rh) {
      report = lie_rh(rh_max);
      tabular = true;
    } else if (*all) {
      report = run_all(quick, all_seed, workers);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPartialFailure;
  }

  const bool csv = format == "csv" || (format == "auto" && tabular);
  const std::string text = csv ? render_csv(report) : render_json(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return kUsageError;
    }
    f << text;
  }
  return report.all_hold() ? 0 : kPartialFailure;
}
