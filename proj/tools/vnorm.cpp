// Command-line front end: single-point norm queries, grid scans, numerical
// range boundary tables, and the analytic-vs-discretization verify suites.
//
// Exit codes: 0 success, 1 verification failure (or oracle non-convergence),
// 2 usage error, 3 I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vnorm/numrange.hpp"
#include "vnorm/oracle.hpp"
#include "vnorm/parallel.hpp"
#include "vnorm/scan.hpp"
#include "vnorm/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Stream selector: --out PATH or stdout.
struct Output {
  std::ofstream file;
  std::ostream* os = &std::cout;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path);
    if (!file) return false;
    os = &file;
    return true;
  }
  bool good() {
    os->flush();
    return static_cast<bool>(*os);
  }
};

json complex_json(vnorm::ComplexScalar z) { return json{{"re", z.re}, {"im", z.im}}; }

json norm_result_json(const vnorm::NormResult& r) {
  json j;
  j["norm"] = r.norm;
  j["status"] = vnorm::quad_status_name(r.status);
  if (r.delta_star) {
    j["delta_star"] = *r.delta_star;
  } else {
    j["delta_star"] = nullptr;
  }
  j["roots_found"] = r.roots_found;
  return j;
}

// Cross-check one analytic value against the n-point discretization.
// Returns the exit code contribution: 0, or kExitVerifyFailed.
int append_oracle_check(json& report, double analytic, vnorm::ComplexScalar c0,
                        vnorm::ComplexScalar c1, vnorm::ComplexScalar c2, int n,
                        std::uint64_t seed) {
  const vnorm::PowerIterResult r = vnorm::oracle_norm(c0, c1, c2, n, seed);
  const double tol = 20.0 / n;
  const double diff = std::abs(analytic - r.value);
  const bool verified = diff <= tol;
  report["verify"] = json{{"n", n},
                          {"oracle", r.value},
                          {"abs_diff", diff},
                          {"tolerance", tol},
                          {"oracle_iterations", r.iterations},
                          {"oracle_converged", r.converged},
                          {"verified", verified}};
  if (!r.converged) {
    std::cerr << "vnorm: oracle power iteration hit the iteration cap at n=" << n << "\n";
    return kExitVerifyFailed;
  }
  if (!verified) {
    std::cerr << "vnorm: analytic value " << analytic << " and oracle value " << r.value
              << " differ by " << diff << " (tolerance " << tol << ")\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int emit_report(const json& report, const std::string& out_path) {
  Output out;
  if (!out.open(out_path)) {
    std::cerr << "vnorm: cannot open output file '" << out_path << "'\n";
    return kExitIo;
  }
  *out.os << report.dump(2) << '\n';
  if (!out.good()) {
    std::cerr << "vnorm: write failed\n";
    return kExitIo;
  }
  return kExitOk;
}

struct Box {
  double x_min, x_max, y_min, y_max;
};

Box default_box(vnorm::ScanKind kind) {
  switch (kind) {
    case vnorm::ScanKind::LinearMu:
    case vnorm::ScanKind::AffineNu:
      return {-3.0, 3.0, -3.0, 3.0};
    case vnorm::ScanKind::QuadSigmaTau:
    case vnorm::ScanKind::CrouzeixSigmaTau:
      return {-2.0, 2.0, -2.0, 2.0};
    case vnorm::ScanKind::MonicXiEta:
      return {-3.0, 3.0, -1.0, 4.0};
    case vnorm::ScanKind::CrouzeixRoots:
      return {-1.0, 1.0, -1.0, 1.0};
    case vnorm::ScanKind::CrouzeixConj:
      return {-1.0, 1.0, 0.0, 1.0};
    case vnorm::ScanKind::FlatRegion:
      return {-3.0, 1.0, -1.0, 4.0};
  }
  return {-1.0, 1.0, -1.0, 1.0};
}

bool scan_kind_verifiable(vnorm::ScanKind kind) {
  switch (kind) {
    case vnorm::ScanKind::LinearMu:
    case vnorm::ScanKind::AffineNu:
    case vnorm::ScanKind::QuadSigmaTau:
    case vnorm::ScanKind::MonicXiEta:
      return true;
    default:
      return false;
  }
}

// Oracle coefficients (c0, c1, c2) for one grid cell of a verifiable kind.
void oracle_coeffs(vnorm::ScanKind kind, double x, double y, vnorm::ComplexScalar& c0,
                   vnorm::ComplexScalar& c1, vnorm::ComplexScalar& c2) {
  switch (kind) {
    case vnorm::ScanKind::LinearMu:
      c0 = {x, y};
      c1 = {1.0, 0.0};
      c2 = {0.0, 0.0};
      break;
    case vnorm::ScanKind::AffineNu:
      c0 = {1.0, 0.0};
      c1 = {x, y};
      c2 = {0.0, 0.0};
      break;
    case vnorm::ScanKind::QuadSigmaTau:
      c0 = {y, 0.0};
      c1 = {x, 0.0};
      c2 = {1.0, 0.0};
      break;
    case vnorm::ScanKind::MonicXiEta:
    default:
      c0 = {1.0, 0.0};
      c1 = {x, 0.0};
      c2 = {y, 0.0};
      break;
  }
}

// Spot-check at most 25 random grid cells against the discretization.
// Returns true when every sampled cell agrees within 20/n.
bool spot_check_scan(const vnorm::ScanResult& result, vnorm::ScanKind kind, int n, int jobs,
                     std::uint64_t seed) {
  const std::size_t total = result.cells.size();
  const std::size_t n_checks = std::min<std::size_t>(25, total);
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(n_checks);

  const double tol = 20.0 / n;
  std::vector<vnorm::CheckResult> checks(n_checks);
  vnorm::parallel_for(n_checks, jobs, [&](std::size_t i) {
    const vnorm::ScanCell& cell = result.cells[order[i]];
    vnorm::ComplexScalar c0, c1, c2;
    oracle_coeffs(kind, cell.x, cell.y, c0, c1, c2);
    const vnorm::PowerIterResult r = vnorm::oracle_norm(c0, c1, c2, n, seed);
    char name[96];
    std::snprintf(name, sizeof(name), "cell (%.6g, %.6g)", cell.x, cell.y);
    checks[i] = vnorm::make_check(name, cell.value, r.value, tol);
  });

  std::size_t failed = 0;
  for (const vnorm::CheckResult& c : checks) {
    if (!c.pass) {
      ++failed;
      std::cerr << "vnorm: spot-check FAIL " << c.name << ": scan " << c.got << " vs oracle "
                << c.want << " (tolerance " << c.tol << ")\n";
    }
  }
  std::cerr << "vnorm: spot-checked " << n_checks << " cells against the n=" << n
            << " discretization: " << (n_checks - failed) << " passed, " << failed << " failed\n";
  return failed == 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = vnorm::kDefaultOracleSeed;
  if (const char* env = std::getenv("VNL_SEED")) {
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, seed);
    if (ec != std::errc() || ptr != end || env == end) {
      std::cerr << "vnorm: invalid VNL_SEED value '" << env << "' (expected an unsigned integer)\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Operator norms of polynomials of the Volterra operator"};
  app.require_subcommand(1);

  // ---- linear-norm ----
  double lin_re = 0.0, lin_im = 0.0;
  int lin_verify_n = 0;
  std::string lin_out;
  CLI::App* linear_cmd = app.add_subcommand("linear-norm", "||V + mu I|| for mu = re + i im");
  linear_cmd->add_option("--re", lin_re, "Re(mu)")->required();
  linear_cmd->add_option("--im", lin_im, "Im(mu)");
  CLI::Option* lin_verify =
      linear_cmd->add_option("--verify", lin_verify_n, "cross-check against an n-point discretization")
          ->check(CLI::Range(2, 100000));
  linear_cmd->add_option("--out", lin_out, "output file (default: stdout)");

  // ---- affine-norm ----
  double aff_re = 0.0, aff_im = 0.0;
  int aff_verify_n = 0;
  std::string aff_out;
  CLI::App* affine_cmd = app.add_subcommand("affine-norm", "||I + nu V|| for nu = re + i im");
  affine_cmd->add_option("--re", aff_re, "Re(nu)")->required();
  affine_cmd->add_option("--im", aff_im, "Im(nu)");
  CLI::Option* aff_verify =
      affine_cmd->add_option("--verify", aff_verify_n, "cross-check against an n-point discretization")
          ->check(CLI::Range(2, 100000));
  affine_cmd->add_option("--out", aff_out, "output file (default: stdout)");

  // ---- quadratic-norm ----
  double quad_sigma = 0.0, quad_tau = 0.0, quad_tol = 1e-12;
  int quad_verify_n = 0;
  std::string quad_out;
  CLI::App* quad_cmd = app.add_subcommand("quadratic-norm", "||V^2 + sigma V + tau I||");
  quad_cmd->add_option("--sigma", quad_sigma, "coefficient of V")->required();
  quad_cmd->add_option("--tau", quad_tau, "coefficient of I")->required();
  quad_cmd->add_option("--tol", quad_tol, "root-solver tolerance")->check(CLI::PositiveNumber);
  CLI::Option* quad_verify =
      quad_cmd->add_option("--verify", quad_verify_n, "cross-check against an n-point discretization")
          ->check(CLI::Range(2, 100000));
  quad_cmd->add_option("--out", quad_out, "output file (default: stdout)");

  // ---- monic-norm ----
  double monic_xi = 0.0, monic_eta = 0.0, monic_tol = 1e-12;
  int monic_verify_n = 0;
  std::string monic_out;
  CLI::App* monic_cmd = app.add_subcommand("monic-norm", "||I + xi V + eta V^2||");
  monic_cmd->add_option("--xi", monic_xi, "coefficient of V")->required();
  monic_cmd->add_option("--eta", monic_eta, "coefficient of V^2")->required();
  monic_cmd->add_option("--tol", monic_tol, "root-solver tolerance")->check(CLI::PositiveNumber);
  CLI::Option* monic_verify =
      monic_cmd->add_option("--verify", monic_verify_n, "cross-check against an n-point discretization")
          ->check(CLI::Range(2, 100000));
  monic_cmd->add_option("--out", monic_out, "output file (default: stdout)");

  // ---- crouzeix ----
  double cr_sigma = 0.0, cr_tau = 0.0, cr_tol = 1e-12;
  std::vector<double> cr_roots, cr_conj;
  std::string cr_out;
  CLI::App* cr_cmd =
      app.add_subcommand("crouzeix", "||p(V)|| / max over the numerical range of |p|");
  CLI::Option* cr_sigma_opt = cr_cmd->add_option("--sigma", cr_sigma, "coefficient of V");
  CLI::Option* cr_tau_opt = cr_cmd->add_option("--tau", cr_tau, "coefficient of I");
  CLI::Option* cr_roots_opt =
      cr_cmd->add_option("--roots", cr_roots, "real zeros x1 x2 of p")->expected(2);
  CLI::Option* cr_conj_opt =
      cr_cmd->add_option("--conj", cr_conj, "conjugate zeros a +- i b of p")->expected(2);
  cr_cmd->add_option("--tol", cr_tol, "root-solver tolerance")->check(CLI::PositiveNumber);
  cr_cmd->add_option("--out", cr_out, "output file (default: stdout)");

  // ---- scan ----
  std::string scan_kind_name, scan_out, scan_format = "csv";
  double scan_xmin = 0.0, scan_xmax = 0.0, scan_ymin = 0.0, scan_ymax = 0.0, scan_tol = 1e-12;
  int scan_nx = 100, scan_ny = 100, scan_jobs = 0, scan_verify_n = 2000;
  bool scan_no_refine = false, scan_do_verify = false, scan_gnuplot = false;
  CLI::App* scan_cmd = app.add_subcommand("scan", "evaluate a norm or ratio over a grid");
  scan_cmd->add_option("kind", scan_kind_name,
                       "one of: linear-mu, affine-nu, quad-sigma-tau, monic-xi-eta, "
                       "crouzeix-sigma-tau, crouzeix-roots, crouzeix-conj, flat-region")
      ->required();
  CLI::Option* sxmin = scan_cmd->add_option("--x-min", scan_xmin, "grid x minimum");
  CLI::Option* sxmax = scan_cmd->add_option("--x-max", scan_xmax, "grid x maximum");
  CLI::Option* symin = scan_cmd->add_option("--y-min", scan_ymin, "grid y minimum");
  CLI::Option* symax = scan_cmd->add_option("--y-max", scan_ymax, "grid y maximum");
  scan_cmd->add_option("--nx", scan_nx, "grid points along x")->check(CLI::Range(2, 100000));
  scan_cmd->add_option("--ny", scan_ny, "grid points along y")->check(CLI::Range(2, 100000));
  scan_cmd->add_option("--jobs", scan_jobs, "worker threads (default: all cores)");
  scan_cmd->add_option("--tol", scan_tol, "root-solver tolerance")->check(CLI::PositiveNumber);
  scan_cmd->add_flag("--no-refine", scan_no_refine,
                     "disable local refinement around the best crouzeix cell");
  scan_cmd->add_flag("--verify", scan_do_verify,
                     "spot-check up to 25 random cells against the discretization");
  scan_cmd->add_option("--verify-n", scan_verify_n, "discretization size for --verify")
      ->check(CLI::Range(2, 100000));
  scan_cmd->add_flag("--gnuplot", scan_gnuplot,
                     "also write a gnuplot script next to the CSV (requires --out)");
  scan_cmd->add_option("--out", scan_out, "output file (default: stdout)");
  scan_cmd->add_option("--format", scan_format, "output format")
      ->check(CLI::IsMember({"csv", "ndjson"}));

  // ---- nr-boundary ----
  int nb_samples = 1024;
  std::string nb_out, nb_format = "csv";
  CLI::App* nb_cmd =
      app.add_subcommand("nr-boundary", "boundary samples of the numerical range of V");
  nb_cmd->add_option("--samples", nb_samples, "points per boundary branch")
      ->check(CLI::Range(16, 10000000));
  nb_cmd->add_option("--out", nb_out, "output file (default: stdout)");
  nb_cmd->add_option("--format", nb_format, "output format")
      ->check(CLI::IsMember({"csv", "ndjson"}));

  // ---- verify ----
  std::string verify_suite, verify_out;
  int verify_n = 4000, verify_jobs = 0;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", verify_suite, "golden, oracle, or flat")
      ->required()
      ->check(CLI::IsMember({"golden", "oracle", "flat"}));
  verify_cmd->add_option("--n", verify_n, "discretization size for the oracle suite")
      ->check(CLI::Range(2, 100000));
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads (default: all cores)");
  verify_cmd->add_option("--out", verify_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*linear_cmd) {
    const vnorm::ComplexScalar mu{lin_re, lin_im};
    const vnorm::LinearNormSolution sol = vnorm::norm_linear(mu);
    json report{{"command", "linear-norm"},
                {"mu", complex_json(mu)},
                {"norm", sol.norm},
                {"rho", sol.rho},
                {"phi", sol.phi}};
    int rc = kExitOk;
    if (lin_verify->count() > 0) {
      rc = append_oracle_check(report, sol.norm, mu, {1.0, 0.0}, {0.0, 0.0}, lin_verify_n, seed);
    }
    const int io = emit_report(report, lin_out);
    return io != kExitOk ? io : rc;
  }

  if (*affine_cmd) {
    const vnorm::ComplexScalar nu{aff_re, aff_im};
    const double norm = vnorm::norm_affine(nu);
    json report{{"command", "affine-norm"}, {"nu", complex_json(nu)}, {"norm", norm}};
    int rc = kExitOk;
    if (aff_verify->count() > 0) {
      rc = append_oracle_check(report, norm, {1.0, 0.0}, nu, {0.0, 0.0}, aff_verify_n, seed);
    }
    const int io = emit_report(report, aff_out);
    return io != kExitOk ? io : rc;
  }

  if (*quad_cmd) {
    const vnorm::RealQuadPoly p{quad_sigma, quad_tau};
    const vnorm::NormResult r = vnorm::norm_quadratic(p, {256, quad_tol});
    json report = norm_result_json(r);
    report["command"] = "quadratic-norm";
    report["sigma"] = quad_sigma;
    report["tau"] = quad_tau;
    int rc = kExitOk;
    if (quad_verify->count() > 0) {
      rc = append_oracle_check(report, r.norm, {quad_tau, 0.0}, {quad_sigma, 0.0}, {1.0, 0.0},
                               quad_verify_n, seed);
    }
    const int io = emit_report(report, quad_out);
    return io != kExitOk ? io : rc;
  }

  if (*monic_cmd) {
    const vnorm::MonicAtZeroQuad q{monic_xi, monic_eta};
    const vnorm::NormResult r = vnorm::norm_monic_quadratic_full(q, {256, monic_tol});
    json report = norm_result_json(r);
    report["command"] = "monic-norm";
    report["xi"] = monic_xi;
    report["eta"] = monic_eta;
    report["flat_region"] = vnorm::flat_region_contains(q);
    int rc = kExitOk;
    if (monic_verify->count() > 0) {
      rc = append_oracle_check(report, r.norm, {1.0, 0.0}, {monic_xi, 0.0}, {monic_eta, 0.0},
                               monic_verify_n, seed);
    }
    const int io = emit_report(report, monic_out);
    return io != kExitOk ? io : rc;
  }

  if (*cr_cmd) {
    const bool has_sigma = cr_sigma_opt->count() > 0;
    const bool has_tau = cr_tau_opt->count() > 0;
    const bool has_roots = cr_roots_opt->count() > 0;
    const bool has_conj = cr_conj_opt->count() > 0;
    if (has_sigma != has_tau) {
      std::cerr << "vnorm: --sigma and --tau must be given together\n";
      return kExitUsage;
    }
    const int groups = (has_sigma ? 1 : 0) + (has_roots ? 1 : 0) + (has_conj ? 1 : 0);
    if (groups != 1) {
      std::cerr << "vnorm: give exactly one of --sigma/--tau, --roots x1 x2, or --conj a b\n";
      return kExitUsage;
    }
    vnorm::RealQuadPoly p{cr_sigma, cr_tau};
    json parametrization;
    if (has_roots) {
      p = vnorm::roots_to_coeffs(vnorm::RootsKind::RealPair, cr_roots[0], cr_roots[1]);
      parametrization = json{{"roots", cr_roots}};
    } else if (has_conj) {
      p = vnorm::roots_to_coeffs(vnorm::RootsKind::ConjugatePair, cr_conj[0], cr_conj[1]);
      parametrization = json{{"conj", cr_conj}};
    } else {
      parametrization = json{{"sigma", cr_sigma}, {"tau", cr_tau}};
    }
    const vnorm::CrouzeixReport r = vnorm::crouzeix_ratio(p);
    json report{{"command", "crouzeix"},
                {"parametrization", parametrization},
                {"sigma", r.poly.sigma},
                {"tau", r.poly.tau},
                {"norm", r.norm},
                {"max_on_w", r.max_on_w},
                {"ratio", r.ratio},
                {"argmax_z", complex_json(r.argmax_z)}};
    return emit_report(report, cr_out);
  }

  if (*scan_cmd) {
    const std::optional<vnorm::ScanKind> kind = vnorm::scan_kind_from_name(scan_kind_name);
    if (!kind) {
      std::cerr << "vnorm: unknown scan kind '" << scan_kind_name << "'\n";
      return kExitUsage;
    }
    if (scan_gnuplot && (scan_out.empty() || scan_format != "csv")) {
      std::cerr << "vnorm: --gnuplot requires --out and csv format\n";
      return kExitUsage;
    }

    vnorm::ScanConfig cfg;
    const Box box = default_box(*kind);
    cfg.x_min = sxmin->count() ? scan_xmin : box.x_min;
    cfg.x_max = sxmax->count() ? scan_xmax : box.x_max;
    cfg.y_min = symin->count() ? scan_ymin : box.y_min;
    cfg.y_max = symax->count() ? scan_ymax : box.y_max;
    cfg.nx = scan_nx;
    cfg.ny = scan_ny;
    cfg.format = scan_format == "ndjson" ? vnorm::ScanFormat::Ndjson : vnorm::ScanFormat::Csv;
    cfg.jobs = scan_jobs;
    cfg.tol = scan_tol;
    cfg.refine = !scan_no_refine;

    vnorm::ScanResult result;
    try {
      result = vnorm::run_scan(*kind, cfg);
    } catch (const std::invalid_argument& e) {
      std::cerr << "vnorm: " << e.what() << "\n";
      return kExitUsage;
    }

    Output out;
    if (!out.open(scan_out)) {
      std::cerr << "vnorm: cannot open output file '" << scan_out << "'\n";
      return kExitIo;
    }
    vnorm::write_scan(result, cfg.format, *out.os);
    if (!out.good()) {
      std::cerr << "vnorm: write failed\n";
      return kExitIo;
    }

    if (scan_gnuplot) {
      const std::string script_path = scan_out + ".gp";
      std::ofstream script(script_path);
      script << vnorm::gnuplot_script(result, scan_out);
      script.flush();
      if (!script) {
        std::cerr << "vnorm: cannot write gnuplot script '" << script_path << "'\n";
        return kExitIo;
      }
      std::cerr << "vnorm: wrote gnuplot script " << script_path << "\n";
    }

    const vnorm::ScanCell& lo = result.cells[result.min_index];
    const vnorm::ScanCell& hi = result.cells[result.max_index];
    std::cerr << "vnorm: scan " << scan_kind_name << " " << cfg.nx << "x" << cfg.ny
              << ": min " << lo.value << " at (" << lo.x << ", " << lo.y << "), max " << hi.value
              << " at (" << hi.x << ", " << hi.y << ")\n";
    if (result.refined) {
      std::cerr << "vnorm: refined max " << result.refined_value << " at (" << result.refined_x
                << ", " << result.refined_y << ")\n";
    }

    if (scan_do_verify) {
      if (!scan_kind_verifiable(*kind)) {
        std::cerr << "vnorm: --verify is not supported for kind '" << scan_kind_name
                  << "'; skipping\n";
      } else if (!spot_check_scan(result, *kind, scan_verify_n, scan_jobs, seed)) {
        return kExitVerifyFailed;
      }
    }
    return kExitOk;
  }

  if (*nb_cmd) {
    const std::vector<vnorm::BoundaryRow> rows = vnorm::boundary_table(nb_samples);
    Output out;
    if (!out.open(nb_out)) {
      std::cerr << "vnorm: cannot open output file '" << nb_out << "'\n";
      return kExitIo;
    }
    vnorm::write_boundary(
        rows, nb_format == "ndjson" ? vnorm::ScanFormat::Ndjson : vnorm::ScanFormat::Csv, *out.os);
    if (!out.good()) {
      std::cerr << "vnorm: write failed\n";
      return kExitIo;
    }
    return kExitOk;
  }

  if (*verify_cmd) {
    std::vector<vnorm::CheckResult> checks;
    if (verify_suite == "golden") {
      checks = vnorm::verify_golden();
    } else if (verify_suite == "oracle") {
      checks = vnorm::verify_oracle(verify_n, verify_jobs, seed);
    } else {
      checks = vnorm::verify_flat(seed);
    }
    Output out;
    if (!out.open(verify_out)) {
      std::cerr << "vnorm: cannot open output file '" << verify_out << "'\n";
      return kExitIo;
    }
    vnorm::print_checks(checks, *out.os);
    if (!out.good()) {
      std::cerr << "vnorm: write failed\n";
      return kExitIo;
    }
    return vnorm::all_pass(checks) ? kExitOk : kExitVerifyFailed;
  }

  return kExitUsage;
}
