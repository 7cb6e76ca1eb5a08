// Command-line verification harness: runs the eigenfunction suites,
// compares Killing forms against the brute-force oracle, reduces p-harmonic
// expressions symbolically, and exports sampled field values.
//
// One JSON object per invocation on stdout; diagnostics on stderr.
// Exit codes: 0 pass, 1 verification failure, 2 usage or domain error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cartan/report.hpp"

namespace {

cartan::Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const double re = std::stod(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const std::string imag_part = text.substr(comma + 1);
    const double im = std::stod(imag_part, &used);
    if (used != imag_part.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::exception&) {
    throw std::invalid_argument("expected RE or RE,IM, got '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cartan: numerical verification of eigenfunctions on the classical "
               "compact symmetric spaces"};
  app.require_subcommand(1);

  std::string space_id, group, candidate, out_path, json_path;
  int m = 0, n = 0, samples = 100, points = 0, p = 1;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  std::string lambda_text = "0", mu_text = "0";

  auto* verify = app.add_subcommand("verify", "run the eigen-residual suite for one space");
  verify->add_option("--space", space_id, "space id")->required();
  verify->add_option("--m", m, "first size parameter (Grassmannians)");
  verify->add_option("--n", n, "second size parameter");
  verify->add_option("--samples", samples, "number of seeded sample points")->required();
  verify->add_option("--seed", seed, "random seed")->required();
  verify->add_option("--tol", tol, "residual tolerance")->required();
  verify->add_option("--json", json_path, "also write the report to this path");

  auto* killing = app.add_subcommand("killing", "closed-form vs brute-force Killing forms");
  killing->add_option("--group", group, "so|u|su|sp")->required();
  killing->add_option("--n", n, "size parameter")->required();

  auto* pharmonic = app.add_subcommand("pharmonic", "symbolic proper p-harmonic verification");
  pharmonic->add_option("--lambda", lambda_text, "tension eigenvalue RE[,IM]")->required();
  pharmonic->add_option("--mu", mu_text, "conformality eigenvalue RE[,IM]")->required();
  pharmonic->add_option("--p", p, "harmonicity order")->required();

  auto* exportc = app.add_subcommand("export", "sample a candidate field to a file");
  exportc->add_option("--space", space_id, "space id")->required();
  exportc->add_option("--candidate", candidate, "candidate id")->required();
  exportc->add_option("--m", m, "first size parameter (Grassmannians)");
  exportc->add_option("--n", n, "second size parameter");
  exportc->add_option("--points", points, "number of sampled points")->required();
  exportc->add_option("--seed", seed, "random seed")->required();
  exportc->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      if (!cartan::known_space_id(space_id)) {
        std::cerr << "unknown space '" << space_id << "'\n";
        return 2;
      }
      const auto report = cartan::run_verify(space_id, m, n, samples, seed, tol);
      const std::string text = cartan::report_to_json(report);
      std::cout << text << "\n";
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
          std::cerr << "cannot write '" << json_path << "'\n";
          return 2;
        }
        out << text << "\n";
      }
      std::cerr << (report.passed ? "PASS" : "FAIL") << " " << report.space << " max residuals "
                << report.max_tau_residual << " / " << report.max_kappa_residual << " / "
                << report.max_cross_residual << "\n";
      return report.passed ? 0 : 1;
    }
    if (killing->parsed()) {
      const auto report = cartan::run_killing(group, n);
      std::cout << cartan::killing_to_json(report) << "\n";
      std::cerr << (report.passed ? "PASS" : "FAIL") << " killing " << group << "(" << n
                << ") max relative deviation " << report.max_relative_deviation << "\n";
      return report.passed ? 0 : 1;
    }
    if (pharmonic->parsed()) {
      const auto report =
          cartan::run_pharmonic(parse_complex(lambda_text), parse_complex(mu_text), p);
      std::cout << cartan::pharmonic_to_json(report) << "\n";
      std::cerr << "case: " << report.case_name << "\n";
      for (size_t k = 0; k < report.trace.size(); ++k)
        std::cerr << "tau^" << (k + 1) << " = " << report.trace[k] << "\n";
      return report.passed ? 0 : 1;
    }
    if (exportc->parsed()) {
      const auto summary =
          cartan::run_export(space_id, m, n, candidate, points, seed, out_path);
      std::cout << cartan::export_to_json(summary) << "\n";
      return 0;
    }
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
