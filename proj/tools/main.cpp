// Command line front end: core/quotient decompositions, skew (hook) Schur
// polynomials with cross-validated evaluation methods, and verification
// sweeps over small instances.
//
// Exit codes: 0 success, 1 mathematical counterexample or internal
// disagreement, 2 usage error.

#include "schurcore/json_io.hpp"
#include "schurcore/quotient.hpp"
#include "schurcore/schur.hpp"
#include "schurcore/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace schurcore;

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw CLI::ValidationError("--format must be json, csv or text");
}

int cmd_core_quotient(const std::string& shape_text, long t, int ell, const std::string& format) {
  Partition lam = Partition::parse(shape_text);
  if (t < 2) {
    std::cerr << "error: --t must be at least 2\n";
    return 2;
  }
  if (ell < 0) {
    ell = static_cast<int>(t) * ((lam.length() + static_cast<int>(t) - 1) / static_cast<int>(t));
    if (ell == 0) ell = static_cast<int>(t);
    std::cerr << "warning: --ell not given, defaulting to " << ell << "\n";
  }
  QuotientDecomposition d = decompose(lam, t, ell);
  if (format == "json") {
    Json j = json_decomposition(d);
    j["lambda"] = json_partition(lam);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "lambda: " << lam.to_string() << "\n";
    std::cout << "beta(" << ell << "):";
    for (int b : d.beta.entries()) std::cout << " " << b;
    std::cout << "\nresidue counts:";
    for (int c : d.counts) std::cout << " " << c;
    std::cout << "\ncore: " << d.core.to_string() << "\nquotient:";
    for (const Partition& q : d.quotient) std::cout << " (" << q.to_string() << ")";
    std::cout << "\nsigma sign: " << d.sigma_sign << "\n";
  }
  return 0;
}

int cmd_schur(const std::string& shape_text, int n, int m, const std::string& method,
              const std::string& format) {
  SkewShape shape = SkewShape::parse(shape_text);
  const auto vars = variable_names(n, m);

  Polynomial<Int> by_det, by_tab;
  bool ran_det = false, ran_tab = false;
  if (method == "jacobi_trudi" || method == "both") {
    by_det = skew_hook_schur(shape, n, m, SchurMethod::jacobi_trudi);
    ran_det = true;
  }
  if (method == "tableaux" || method == "both") {
    by_tab = skew_hook_schur(shape, n, m, SchurMethod::tableaux);
    ran_tab = true;
  }
  bool agree = !(ran_det && ran_tab) || by_det == by_tab;
  const Polynomial<Int>& value = ran_det ? by_det : by_tab;

  if (format == "json") {
    Json j{{"shape", json_shape(shape)}, {"n", n}, {"m", m}, {"method", method},
           {"polynomial", json_polynomial(value, vars)}};
    if (ran_det && ran_tab) j["methods_agree"] = agree;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (m > 0 ? "hs_" : "s_") << shape.to_string() << " = " << value.to_string(vars)
              << "\n";
    if (ran_det && ran_tab)
      std::cout << "methods agree: " << (agree ? "yes" : "NO") << "\n";
  }
  if (!agree) {
    std::cerr << "error: evaluation methods disagree\n";
    return 1;
  }
  return 0;
}

int cmd_verify(SweepOptions options, const std::string& out_path) {
  SweepResult result = run_sweep(options);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return 2;
    }
    out = &file;
  }
  for (const std::string& line : result.lines) *out << line << "\n";
  std::cerr << options.selector << ": " << result.passed << "/" << result.total << " passed";
  if (result.failed > 0) std::cerr << ", " << result.failed << " FAILED";
  std::cerr << "\n";
  if (result.failed > 0) {
    std::cerr << "first counterexample: " << result.first_failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with skew hook Schur polynomials, t-cores/quotients,\n"
               "ribbon supertableaux and cyclic sieving checks"};
  app.require_subcommand(1);

  // core-quotient
  std::string cq_shape;
  long cq_t = 2;
  int cq_ell = -1;
  std::string cq_format = "json";
  auto* cq = app.add_subcommand("core-quotient",
                                "Beta set, residue counts, core, quotient and sigma sign");
  cq->add_option("shape", cq_shape, "partition, e.g. 4,2,1 (empty: 0)")->required();
  cq->add_option("--t", cq_t, "modulus t >= 2")->required();
  cq->add_option("--ell", cq_ell, "declared length (defaults to t*ceil(length/t))");
  cq->add_option("--format", cq_format, "json|text");

  // schur
  std::string s_shape, s_method = "both", s_format = "json";
  int s_n = 1, s_m = 0;
  auto* sc = app.add_subcommand("schur", "Skew (hook) Schur polynomial with method cross-check");
  sc->add_option("shape", s_shape, "shape, e.g. 2,2/1")->required();
  sc->add_option("--n", s_n, "number of x variables");
  sc->add_option("--m", s_m, "number of y variables");
  sc->add_option("--method", s_method, "jacobi_trudi|tableaux|both");
  sc->add_option("--format", s_format, "json|text");

  // verify
  SweepOptions vopt;
  std::string v_selector, v_format = "json", v_out;
  auto* vf = app.add_subcommand("verify", "Run a verification sweep");
  vf->add_option("selector", v_selector,
                 "h-special|factorize|factorize-schur|ribbon-count|divisibility|csp|csp-super")
      ->required();
  vf->add_option("--t", vopt.t, "modulus t >= 2");
  vf->add_option("--n", vopt.n, "x alphabet bound");
  vf->add_option("--m", vopt.m, "y alphabet bound");
  vf->add_option("--d", vopt.d, "divisor of t (ribbon-count; 0 = all)");
  vf->add_option("--max-size", vopt.max_size, "bound on |lambda|");
  vf->add_option("--max-length", vopt.max_length, "bound on length(lambda)");
  vf->add_option("--max-k", vopt.max_k, "bound on k (h-special)");
  vf->add_option("--jobs", vopt.jobs, "worker threads");
  vf->add_flag("--probe-converse", vopt.probe_converse,
               "csp: report unequal-sign instances instead of asserting");
  vf->add_option("--format", v_format, "json|csv|text");
  vf->add_option("--out", v_out, "write report lines to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cq->parsed()) return cmd_core_quotient(cq_shape, cq_t, cq_ell, cq_format);
    if (sc->parsed()) {
      if (s_method != "jacobi_trudi" && s_method != "tableaux" && s_method != "both") {
        std::cerr << "error: unknown method '" << s_method << "'\n";
        return 2;
      }
      return cmd_schur(s_shape, s_n, s_m, s_method, s_format);
    }
    if (vf->parsed()) {
      vopt.selector = v_selector;
      vopt.format = parse_format(v_format);
      return cmd_verify(vopt, v_out);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
