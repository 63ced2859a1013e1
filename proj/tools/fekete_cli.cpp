#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fekete/serialize.hpp"

using namespace fekete;

namespace {

constexpr int kExitUsage = 64;

void emit(std::string payload, const std::string& out_path) {
  if (payload.empty() || payload.back() != '\n') payload += '\n';
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << payload;
  }
}

int exit_code_of(const FejerCertificate& cert) {
  switch (cert.status) {
    case CertStatus::certified:
      return 0;
    case CertStatus::refuted:
      return 1;
    case CertStatus::inconclusive:
      return 2;
  }
  return 2;
}

struct Options {
  int n = 2;
  int d = 2;
  int r_max = -1;
  mpfr_prec_t prec_bits = 128;
  int digits = 17;
  int starts = 200;
  int threads = 1;
  int samples = 200;
  std::uint64_t seed = 1;
  double tol = 1e-6;
  std::string format = "json";
  std::string out;
  std::string points_kind = "candidate";
  std::string what = "all";
  bool numeric = false;
  bool full_kernel = false;
  bool fourth_power = false;
  bool chain = false;
  bool local_w = false;
  bool solve = false;
};

Deg5Params params_at(const Options& opt) {
  return compute_deg5_params(std::max<mpfr_prec_t>(opt.prec_bits, 256),
                             opt.local_w);
}

NumericLagrange numeric_lagrange_for(const Options& opt) {
  if (opt.n <= 4) return numeric_lagrange_exact(opt.n, opt.d);
  const auto params = params_at(opt);
  return numeric_lagrange(
      fekete_candidate_numeric(5, opt.d, params, opt.prec_bits), 5);
}

MaxConfig max_config_for(const Options& opt) {
  MaxConfig cfg;
  cfg.starts = opt.starts;
  cfg.seed = opt.seed;
  cfg.threads = opt.threads;
  return cfg;
}

int cmd_points(const Options& opt) {
  std::string payload;
  if (opt.n <= 4 && !opt.numeric) {
    const auto ps = fekete_candidate_exact(opt.n, opt.d);
    payload = (opt.format == "csv" || opt.format == "text")
                  ? pointset_csv(ps, opt.digits)
                  : pointset_json(ps, opt.digits, opt.prec_bits);
  } else {
    const auto params = params_at(opt);
    const auto ps =
        fekete_candidate_numeric(opt.n, opt.d, params, opt.prec_bits);
    payload = (opt.format == "csv" || opt.format == "text")
                  ? pointset_csv(ps, opt.digits)
                  : pointset_json(ps, opt.digits);
  }
  emit(payload, opt.out);
  return 0;
}

int cmd_lagrange(const Options& opt) {
  const LagrangeBasis basis =
      opt.solve ? lagrange_solve(fekete_candidate_exact(opt.n, opt.d), opt.n)
                : lagrange_closed_form(opt.n, opt.d);
  emit(lagrange_json(basis, opt.digits), opt.out);
  return 0;
}

int cmd_vdm(const Options& opt) {
  ExactPointSet ps;
  if (opt.points_kind == "candidate") {
    ps = fekete_candidate_exact(opt.n, opt.d);
  } else if (opt.points_kind == "vertices") {
    if (opt.n != 1)
      throw CLI::ValidationError("--points vertices needs degree 1");
    ps = fekete_candidate_exact(1, opt.d);
  } else if (opt.points_kind == "midpoints") {
    if (opt.n != 1 || opt.d != 2)
      throw CLI::ValidationError(
          "--points midpoints is the (n=1, d=2) counterexample");
    ps.degree = 1;
    ps.dim = 2;
    const AlgebraicScalar half(rat(1, 2));
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      BaryPoint<AlgebraicScalar> pt;
      pt.coords.assign(3, AlgebraicScalar(0));
      pt.coords[static_cast<size_t>(i)] = half;
      pt.coords[static_cast<size_t>(j)] = half;
      pt.face = {i, j};
      pt.tag = {1, 0, {i, j}};
      ps.points.push_back(std::move(pt));
    }
  } else {
    throw CLI::ValidationError("unknown --points kind " + opt.points_kind);
  }
  const AlgebraicScalar det = vdm_det(ps, opt.n);
  std::ostringstream payload;
  payload << "{\n  \"degree\": " << opt.n << ",\n  \"dim\": " << opt.d
          << ",\n  \"points\": \"" << opt.points_kind
          << "\",\n  \"count\": " << ps.points.size()
          << ",\n  \"det_exact\": \"" << det.to_string()
          << "\",\n  \"det_decimal\": \"" << decimal_string(det, opt.digits)
          << "\"\n}";
  emit(payload.str(), opt.out);
  return 0;
}

int cmd_certify(const Options& opt) {
  if (opt.n == 5) {
    if (!opt.numeric)
      throw CLI::ValidationError(
          "degree 5 has no exact certificate path; pass --numeric");
    if (opt.d > 3)
      throw CLI::ValidationError(
          "numeric degree-5 check implemented for d <= 3");
    const auto params = params_at(opt);
    const Interval k = deg5_kernel_centroid_enclosure(
        opt.d, params, std::max<mpfr_prec_t>(opt.prec_bits, 192));
    FejerCertificate cert;
    cert.degree = 5;
    cert.dim = opt.d;
    cert.method = "interval-centroid-check";
    if (k.lo_double() > 1.0) {
      cert.status = CertStatus::refuted;
      cert.refutation_point.assign(static_cast<size_t>(opt.d + 1),
                                   rat(1, opt.d + 1));
      cert.refutation_value = k.to_string(20);
    } else {
      cert.status = CertStatus::inconclusive;
    }
    emit(certificate_json(cert), opt.out);
    return exit_code_of(cert);
  }

  if (opt.chain) {
    const auto chain = certify_fejer(opt.n, opt.d, opt.r_max);
    std::string payload = "[\n";
    int code = 0;
    for (size_t i = 0; i < chain.size(); ++i) {
      payload += certificate_json(chain[i]);
      if (i + 1 < chain.size()) payload += ",\n";
      code = std::max(code, exit_code_of(chain[i]));
    }
    payload += "\n]";
    emit(payload, opt.out);
    return code;
  }

  FejerCertificate cert;
  if (opt.fourth_power) {
    cert = certify_fourth_power(opt.d, opt.r_max < 0 ? 14 : opt.r_max);
  } else if (opt.n == 4 && !opt.full_kernel) {
    if (opt.d < 3)
      throw CLI::ValidationError(
          "the degree-4 partial-sum certificate needs d >= 3; "
          "use --full-kernel for d <= 2");
    cert = certify_deg4_partial_sum(opt.d, opt.r_max);
    const auto companion = certify_am_gm_3face();
    std::string payload = "[\n" + certificate_json(cert) + ",\n" +
                          certificate_json(companion) + "\n]";
    emit(payload, opt.out);
    return std::max(exit_code_of(cert), exit_code_of(companion));
  } else {
    KernelOptions kopts;
    cert = certify_step(opt.n, opt.d, opt.r_max, kopts);
  }
  emit(certificate_json(cert), opt.out);
  return exit_code_of(cert);
}

int cmd_exponent(const Options& opt) {
  const NumericLagrange lag = numeric_lagrange_for(opt);
  const auto result = fejer_exponent(lag, opt.tol, max_config_for(opt));
  emit(exponent_json(result, opt.n, opt.d), opt.out);
  return 0;
}

int cmd_maxk(const Options& opt) {
  const NumericLagrange lag = numeric_lagrange_for(opt);
  const auto rep = max_over_simplex(
      [&](std::span<const double> x) { return lag.sum_squares(x); }, opt.d,
      max_config_for(opt));
  emit(max_report_json(rep, opt.n, opt.d), opt.out);
  return 0;
}

int cmd_design_check(const Options& opt) {
  const auto report = design_check(fekete_candidate_exact(opt.n, opt.d),
                                   opt.n, static_cast<size_t>(opt.samples),
                                   opt.seed);
  emit(design_report_json(report, opt.digits), opt.out);
  return report.violation_found ? 1 : 0;
}

int cmd_search_deg5(const Options& opt) {
  std::string payload;
  if (opt.what == "2face") {
    payload = deg5_twoface_json(
        optimize_deg5_2face(std::max<mpfr_prec_t>(opt.prec_bits, 256)), 30);
  } else if (opt.what == "3face") {
    payload = deg5_threeface_json(optimize_deg5_3face());
  } else if (opt.what == "resultant") {
    const UniPoly res = rederive_q_by_resultant();
    const auto [quot, rem] = res.divrem(deg5_parameter_poly());
    std::ostringstream s;
    s << "{\n  \"resultant_degree\": " << res.degree()
      << ",\n  \"reference_q_divides\": " << (rem.is_zero() ? "true" : "false")
      << ",\n  \"cofactor_degree\": " << quot.degree() << "\n}";
    payload = s.str();
  } else if (opt.what == "decoupling") {
    payload = "[\n" + decoupling_json(vdm_decoupling_check_deg5(2), 2) +
              ",\n" + decoupling_json(vdm_decoupling_check_deg5(3), 3) +
              "\n]";
  } else if (opt.what == "all") {
    const UniPoly res = rederive_q_by_resultant();
    const auto [quot, rem] = res.divrem(deg5_parameter_poly());
    payload =
        std::string("{\n\"twoface\": ") +
        deg5_twoface_json(
            optimize_deg5_2face(std::max<mpfr_prec_t>(opt.prec_bits, 256)),
            30) +
        ",\n\"threeface\": " + deg5_threeface_json(optimize_deg5_3face()) +
        ",\n\"resultant_divisible\": " + (rem.is_zero() ? "true" : "false") +
        ",\n\"decoupling_d2\": " +
        decoupling_json(vdm_decoupling_check_deg5(2), 2) +
        ",\n\"decoupling_d3\": " +
        decoupling_json(vdm_decoupling_check_deg5(3), 3) + "\n}";
  } else {
    throw CLI::ValidationError("unknown --what " + opt.what);
  }
  emit(payload, opt.out);
  return 0;
}

void add_common(CLI::App* cmd, Options& opt, bool with_nd = true) {
  if (with_nd) {
    cmd->add_option("-n,--degree", opt.n, "polynomial degree")
        ->check(CLI::Range(1, 5));
    cmd->add_option("-d,--dim", opt.d, "simplex dimension")
        ->check(CLI::Range(1, 32));
  }
  cmd->add_option("--prec-bits", opt.prec_bits, "working precision in bits")
      ->check(CLI::Range(24, 1 << 16));
  cmd->add_option("--format", opt.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", opt.out, "write the report to a file");
  cmd->add_option("--digits", opt.digits, "decimal digits in output");
  cmd->add_option("--threads", opt.threads, "worker cap for multistarts")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--seed", opt.seed, "random seed");
  cmd->add_option("--starts", opt.starts, "multistart count");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Candidate Fekete/Fejer point sets on the d-simplex: construction, "
      "exact certificates and numeric diagnostics"};
  app.require_subcommand(1);

  Options opt;
  int exit_code = 0;
  auto run = [&](int (*fn)(const Options&)) {
    return [fn, &opt, &exit_code]() { exit_code = fn(opt); };
  };

  auto* points = app.add_subcommand("points", "emit the candidate set F_n");
  add_common(points, opt);
  points->add_flag("--numeric", opt.numeric,
                   "interval coordinates (required path for degree 5)");
  points->callback(run(cmd_points));

  auto* lagrange =
      app.add_subcommand("lagrange", "Lagrange basis polynomials");
  add_common(lagrange, opt);
  lagrange->add_flag("--solve", opt.solve,
                     "use the exact linear solve instead of closed forms");
  lagrange->callback(run(cmd_lagrange));

  auto* vdm = app.add_subcommand("vdm", "exact Vandermonde determinant");
  add_common(vdm, opt);
  vdm->add_option("--points", opt.points_kind,
                  "candidate, vertices or midpoints");
  vdm->callback(run(cmd_vdm));

  auto* certify =
      app.add_subcommand("certify", "positivity certificates for 1 - K_n");
  add_common(certify, opt);
  certify->add_option("--r-max", opt.r_max, "elevation cap");
  certify->add_flag("--full-kernel", opt.full_kernel,
                    "degree 4: certify the full kernel, not the partial sum");
  certify->add_flag("--fourth-power", opt.fourth_power,
                    "check sum l_i^4 <= 1 instead of the squares");
  certify->add_flag("--numeric", opt.numeric,
                    "degree 5: rigorous interval check at the centroid");
  certify->add_flag("--chain", opt.chain,
                    "emit the full induction chain d' = 1..d");
  certify->callback(run(cmd_certify));

  auto* exponent = app.add_subcommand("exponent", "Fejer exponent");
  add_common(exponent, opt);
  exponent->add_option("--tol", opt.tol, "bisection tolerance in r");
  exponent->add_flag("--local-w", opt.local_w,
                     "degree 5: use w = (9+sqrt5)/38");
  exponent->callback(run(cmd_exponent));

  auto* maxk = app.add_subcommand("maxk", "maximize sum l_i^2 over S_d");
  add_common(maxk, opt);
  maxk->add_flag("--local-w", opt.local_w,
                 "degree 5: use w = (9+sqrt5)/38");
  maxk->callback(run(cmd_maxk));

  auto* design =
      app.add_subcommand("design-check", "G-/D-optimality diagnostics");
  add_common(design, opt);
  design->add_option("--samples", opt.samples, "random sample count");
  design->callback(run(cmd_design_check));

  auto* deg5 = app.add_subcommand(
      "search-deg5", "degree-5 free parameters and decoupling checks");
  add_common(deg5, opt, false);
  deg5->add_option("--what", opt.what,
                   "2face, 3face, resultant, decoupling or all");
  deg5->callback(run(cmd_search_deg5));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
  return exit_code;
}
