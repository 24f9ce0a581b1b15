#include "cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hfl/deconvolution.hpp"
#include "hfl/grid.hpp"
#include "hfl/homology.hpp"
#include "hfl/predictions.hpp"
#include "hfl/serialize.hpp"
#include "hfl/verifier.hpp"

namespace hfl::cli {

namespace {

struct Options {
  int n = 2;
  int multiplier = 1;
  int workers = 0;
  std::uint64_t budget_mb = 512;
  std::string cache_dir;
  std::string format = "json";
  std::string out_path;
  bool strict_conjecture = false;
  std::string property;
};

ComputeOptions compute_options(const Options& opt) {
  return ComputeOptions{opt.workers, opt.budget_mb};
}

std::optional<TableCache> cache_for(const Options& opt) {
  if (!opt.cache_dir.empty()) return TableCache(opt.cache_dir);
  if (const char* env = std::getenv("HFL_CACHE_DIR"); env && *env)
    return TableCache(env);
  return std::nullopt;
}

LinkInfo link_info(int n, int multiplier) {
  LinkInfo info;
  info.family = "torus";
  info.n = n;
  info.multiplier = multiplier;
  info.grid_size = n * (multiplier + 1);
  return info;
}

/// Tilde table for T(n, sn), going through the cache when one is
/// configured. Unusable cache entries are reported and rebuilt.
GradedDimTable tilde_for(const Options& opt, int n, int multiplier,
                         std::ostream& err) {
  const GridDiagram g = torus_grid(n, multiplier);
  const LinkInfo info = link_info(n, multiplier);
  const auto cache = cache_for(opt);
  if (cache) {
    std::string warning;
    if (auto cached = cache->load(info, g, &warning)) return *cached;
    if (!warning.empty()) err << "warning: " << warning << "\n";
  }
  const GradedDimTable tilde = tilde_homology(g, compute_options(opt));
  if (cache) cache->store(info, g, tilde);
  return tilde;
}

GradedDimTable hat_for(const Options& opt, int n, int multiplier,
                       std::ostream& err) {
  const GridDiagram g = torus_grid(n, multiplier);
  return strip_factors(tilde_for(opt, n, multiplier, err),
                       FactorSpec::for_grid(g));
}

void emit(const Options& opt, const GradedDimTable& table,
          const LinkInfo& info, std::ostream& out, std::ostream& err) {
  const std::string text =
      opt.format == "csv" ? to_csv(table) : to_json(table, info);
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::trunc);
  if (!file) throw Error("cannot open output file " + opt.out_path);
  file << text;
  err << "wrote " << opt.out_path << "\n";
}

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

int run_predict(const Options& opt, std::ostream& out, std::ostream& err) {
  const PredictionTable predicted = full_table(opt.n);
  emit(opt, predicted.table, link_info(opt.n, 1), out, err);
  return kExitOk;
}

int run_compute(const Options& opt, std::ostream& out, std::ostream& err) {
  const GradedDimTable hat = hat_for(opt, opt.n, opt.multiplier, err);
  emit(opt, hat, link_info(opt.n, opt.multiplier), out, err);
  return kExitOk;
}

int run_linking(const Options& opt, std::ostream& out, std::ostream&) {
  const GridDiagram g = torus_grid(opt.n, opt.multiplier);
  const auto lk = linking_matrix(g);
  if (opt.format == "csv") {
    for (const auto& row : lk) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << row[i];
      out << "\n";
    }
    return kExitOk;
  }
  const LinkInfo info = link_info(opt.n, opt.multiplier);
  out << "{\n  \"schema_version\": 1,\n  \"link\": {\"family\": \""
      << info.family << "\", \"n\": " << info.n
      << ", \"multiplier\": " << info.multiplier << "},\n  \"grid_size\": "
      << info.grid_size << ",\n  \"linking_matrix\": [";
  for (std::size_t r = 0; r < lk.size(); ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < lk[r].size(); ++c)
      out << (c ? ", " : "") << lk[r][c];
    out << "]";
  }
  out << "]\n}\n";
  return kExitOk;
}

int verdict(const Options& opt, bool theorem_fail, bool conjecture_fail) {
  if (theorem_fail) return kExitTheoremMismatch;
  if (conjecture_fail)
    return opt.strict_conjecture ? kExitTheoremMismatch
                                 : kExitConjectureMismatch;
  return kExitOk;
}

int run_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const GridDiagram g = torus_grid(opt.n, 1);
  const GradedDimTable tilde = tilde_for(opt, opt.n, 1, err);
  GradedDimTable hat = strip_factors(tilde, FactorSpec::for_grid(g));

  const std::vector<int> offset = recenter(hat);
  const bool recentered =
      std::any_of(offset.begin(), offset.end(), [](int v) { return v != 0; });
  out << "verify n=" << opt.n << " grid=" << g.size << "x" << g.size
      << " states=" << state_count(g) << "\n";
  if (recentered) out << "recenter offset: " << join(offset) << "\n";

  VerificationReport report = compare(hat, full_table(opt.n));
  report.recenter_offset = offset;

  int matches = 0, conjecture_matches = 0;
  for (const auto& p : report.points) {
    if (p.status == PointStatus::Match) {
      ++matches;
      continue;
    }
    if (p.status == PointStatus::ConjectureMatch) {
      ++conjecture_matches;
      continue;
    }
    out << "point " << join(p.alexander2) << ": " << to_string(p.status)
        << "; computed {";
    bool first = true;
    for (const auto& [m, r] : p.computed) {
      out << (first ? "" : ", ") << m << ": " << r;
      first = false;
    }
    out << "} predicted {";
    first = true;
    for (const auto& [m, r] : p.predicted) {
      out << (first ? "" : ", ") << m << ": " << r;
      first = false;
    }
    out << "}\n";
  }
  out << "points: " << matches << " theorem match, " << conjecture_matches
      << " conjecture match, "
      << (report.points.size() - std::size_t(matches) -
          std::size_t(conjecture_matches))
      << " disagree\n";

  const auto orbit = orbit_check(hat);
  const auto conjugation = conjugation_check(hat);
  const auto totals = totals_check(tilde, hat, g.size, opt.n);
  out << "orbit symmetry: " << (orbit.empty() ? "pass" : "FAIL") << "\n";
  out << "conjugation symmetry: " << (conjugation.empty() ? "pass" : "FAIL")
      << "\n";
  out << "totals: " << (totals.passed() ? "pass" : "FAIL") << " (tilde "
      << totals.tilde_total << " = hat " << totals.hat_total << " x 2^"
      << totals.expected_factor_log2 << ")\n";

  const bool theorem_fail = report.theorem_mismatch() || !orbit.empty() ||
                            !conjugation.empty() || !totals.passed();
  const int code = verdict(opt, theorem_fail, report.conjecture_mismatch());
  out << "result: "
      << (code == kExitOk ? "all checks pass"
                          : code == kExitConjectureMismatch
                                ? "conjecture-only mismatch"
                                : "FAILED")
      << "\n";
  return code;
}

int run_check(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.property == "orbit" || opt.property == "conjugation") {
    const GradedDimTable hat = hat_for(opt, opt.n, 1, err);
    const auto violations =
        opt.property == "orbit" ? orbit_check(hat) : conjugation_check(hat);
    for (const auto& v : violations)
      out << "violation at " << join(v.grading.alexander2) << " m="
          << v.grading.maslov << ": rank " << v.rank << " vs "
          << v.permuted_rank << " at " << join(v.permuted.alexander2)
          << " m=" << v.permuted.maslov << "\n";
    out << "check " << opt.property << " n=" << opt.n << ": "
        << (violations.empty() ? "pass" : "FAIL") << "\n";
    return violations.empty() ? kExitOk : kExitTheoremMismatch;
  }
  if (opt.property == "totals") {
    const GridDiagram g = torus_grid(opt.n, 1);
    const GradedDimTable tilde = tilde_for(opt, opt.n, 1, err);
    const GradedDimTable hat = strip_factors(tilde, FactorSpec::for_grid(g));
    const auto totals = totals_check(tilde, hat, g.size, opt.n);
    out << "check totals n=" << opt.n << ": "
        << (totals.passed() ? "pass" : "FAIL") << " (tilde "
        << totals.tilde_total << ", hat " << totals.hat_total << ", factor 2^"
        << totals.expected_factor_log2 << ")\n";
    return totals.passed() ? kExitOk : kExitTheoremMismatch;
  }
  if (opt.property == "forgetful") {
    if (opt.n < 3)
      throw InvalidArgument("forgetful check needs n >= 3");
    GradedDimTable hat_n = hat_for(opt, opt.n, 1, err);
    GradedDimTable hat_prev = hat_for(opt, opt.n - 1, 1, err);
    recenter(hat_n);
    recenter(hat_prev);
    bool all_ok = true;
    for (int i = 0; i < opt.n; ++i) {
      const ForgetfulReport fr = forgetful_check(hat_n, hat_prev, i);
      out << "component " << (i + 1) << ": "
          << (fr.passed() ? "pass" : "FAIL") << " (" << fr.fibers.size()
          << " fibers)\n";
      all_ok = all_ok && fr.passed();
    }
    out << "check forgetful n=" << opt.n << ": "
        << (all_ok ? "pass" : "FAIL") << "\n";
    return all_ok ? kExitOk : kExitTheoremMismatch;
  }
  throw InvalidArgument("unknown property: " + opt.property);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Multigraded link Floer homology of (n,n)-torus links"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_multiplier) {
    cmd->add_option("--n", opt.n, "torus link parameter n")
        ->required()
        ->check(CLI::Range(2, 64));
    if (with_multiplier)
      cmd->add_option("--multiplier", opt.multiplier,
                      "present T(n, s*n) with this s")
          ->check(CLI::Range(1, 14));
    cmd->add_option("--workers", opt.workers,
                    "worker threads (0 = hardware)");
    cmd->add_option("--budget-mb", opt.budget_mb,
                    "memory budget for state enumeration");
    cmd->add_option("--cache-dir", opt.cache_dir,
                    "tilde-table cache directory (default $HFL_CACHE_DIR)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* predict = app.add_subcommand(
      "predict", "emit the closed-form predicted hat table");
  add_common(predict, false);
  predict->add_option("--out", opt.out_path, "write to file");

  CLI::App* compute = app.add_subcommand(
      "compute", "compute the hat table from the grid complex");
  add_common(compute, true);
  compute->add_option("--out", opt.out_path, "write to file");

  CLI::App* verify = app.add_subcommand(
      "verify", "compute, compare against predictions, check symmetries");
  add_common(verify, false);
  verify->add_flag("--strict-conjecture", opt.strict_conjecture,
                   "treat conjecture mismatches as hard failures");

  CLI::App* check =
      app.add_subcommand("check", "run one structural property check");
  add_common(check, false);
  check
      ->add_option("--property", opt.property,
                   "orbit | conjugation | forgetful | totals")
      ->required()
      ->check(CLI::IsMember({"orbit", "conjugation", "forgetful", "totals"}));

  CLI::App* linking =
      app.add_subcommand("linking", "emit the pairwise linking matrix");
  add_common(linking, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (predict->parsed()) return run_predict(opt, out, err);
    if (compute->parsed()) return run_compute(opt, out, err);
    if (verify->parsed()) return run_verify(opt, out, err);
    if (check->parsed()) return run_check(opt, out, err);
    if (linking->parsed()) return run_linking(opt, out, err);
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hfl::cli
