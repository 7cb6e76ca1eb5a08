#include "cartan/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "cartan/rng.hpp"

namespace cartan {

using nlohmann::json;

namespace {

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

std::vector<Complex> seeded_vector(int len, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Complex> v(len);
  for (int k = 0; k < len; ++k) v[k] = rng.complex_gaussian();
  return v;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt) {
  std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ull * (index + 1)) ^ (0xbf58476d1ce4e5b9ull * attempt);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

std::string report_to_json(const VerificationReport& r) {
  json j;
  j["space"] = r.space;
  j["candidate"] = r.candidate;
  j["samples"] = r.samples;
  j["tolerance"] = r.tolerance;
  j["max_tau_residual"] = r.max_tau_residual;
  j["max_kappa_residual"] = r.max_kappa_residual;
  j["max_cross_residual"] = r.max_cross_residual;
  j["seed"] = r.seed;
  j["passed"] = r.passed;
  j["wall_time_ms"] = r.wall_time_ms;
  return j.dump();
}

VerificationReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  VerificationReport r;
  r.space = j.at("space").get<std::string>();
  r.candidate = j.at("candidate").get<std::string>();
  r.samples = j.at("samples").get<int>();
  r.tolerance = j.at("tolerance").get<double>();
  r.max_tau_residual = j.at("max_tau_residual").get<double>();
  r.max_kappa_residual = j.at("max_kappa_residual").get<double>();
  r.max_cross_residual = j.at("max_cross_residual").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.passed = j.at("passed").get<bool>();
  r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
  return r;
}

bool known_space_id(const std::string& id) {
  return id == "complex-grassmannian" || id == "real-grassmannian" ||
         id == "quaternionic-grassmannian" || id == "su-so" || id == "so-u" || id == "sp-u" ||
         id == "su-sp";
}

void default_parameters(const std::string& id, int& m, int& n) {
  if (!known_space_id(id)) throw std::invalid_argument("unknown space id '" + id + "'");
  if (m <= 0) m = 1;
  if (n <= 0) {
    if (id == "sp-u") n = 1;
    else if (id == "su-so" || id == "so-u" || id == "su-sp") n = 2;
    else n = 1;
  }
}

SpaceSpec space_from_id(const std::string& id, int m, int n) {
  if (id == "complex-grassmannian") return complex_grassmannian(m, n);
  if (id == "real-grassmannian") return real_grassmannian(m, n);
  if (id == "quaternionic-grassmannian") return quaternionic_grassmannian(m, n);
  if (id == "su-so") return su_so_space(n);
  if (id == "so-u") return so2n_u_space(n);
  if (id == "sp-u") return sp_u_space(n);
  if (id == "su-sp") return su2n_sp_space(n);
  throw std::invalid_argument("unknown space id '" + id + "'");
}

std::vector<EigenCandidate> default_candidates(const std::string& id, int m, int n,
                                               std::uint64_t seed) {
  if (id == "complex-grassmannian") return complex_grassmannian_family(m, n, 1);
  if (id == "quaternionic-grassmannian") return quaternionic_grassmannian_family(m, n, 1);
  if (id == "real-grassmannian")
    return {real_grassmannian_eigenfunction(m, n, isotropic_vector(m + n, mix_seed(seed, 101, 0)))};
  if (id == "su-so") return {su_so_eigenfunction(n, seeded_vector(n, mix_seed(seed, 102, 0)))};
  if (id == "so-u") {
    const auto [a, b] = isotropic_plane(2 * n, mix_seed(seed, 103, 0));
    return {so2n_un_eigenfunction(n, a.entries, b.entries)};
  }
  if (id == "sp-u") return {spn_un_eigenfunction(n, seeded_vector(2 * n, mix_seed(seed, 104, 0)))};
  if (id == "su-sp")
    return {su2n_spn_eigenfunction(n, seeded_vector(2 * n, mix_seed(seed, 105, 0)),
                                   seeded_vector(2 * n, mix_seed(seed, 106, 0)))};
  throw std::invalid_argument("unknown space id '" + id + "'");
}

ResidualStats eigen_residuals(const std::vector<EigenCandidate>& family, int samples,
                              std::uint64_t seed) {
  if (family.empty()) throw std::invalid_argument("eigen_residuals: empty candidate set");
  const SpaceSpec space = family.front().space;
  const auto basis = ambient_algebra_basis(space);
  ResidualStats stats;
  for (int i = 0; i < samples; ++i) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (attempt > 16) throw std::runtime_error("eigen_residuals: too many singular samples");
      const CMat p = sample_ambient_point(space, mix_seed(seed, i, attempt));
      try {
        std::vector<Complex> values;
        for (const EigenCandidate& c : family) {
          const Complex psi = c.field.eval_plain(p);
          values.push_back(psi);
          const Complex tau = tension(c.field, basis, p);
          const Complex kap = conformality(c.field, c.field, basis, p);
          stats.max_tau =
              std::max(stats.max_tau, std::abs(tau - c.lambda * psi) / (1.0 + std::abs(psi)));
          stats.max_kappa = std::max(stats.max_kappa, std::abs(kap - c.mu * psi * psi) /
                                                          (1.0 + std::abs(psi) * std::abs(psi)));
        }
        for (size_t a = 0; a < family.size(); ++a)
          for (size_t b = a + 1; b < family.size(); ++b) {
            const Complex kab = conformality(family[a].field, family[b].field, basis, p);
            const Complex prod = values[a] * values[b];
            stats.max_cross = std::max(stats.max_cross, std::abs(kab - family.front().mu * prod) /
                                                            (1.0 + std::abs(prod)));
          }
        break;
      } catch (const EvaluationError&) {
        continue;  // singular sample, redraw
      }
    }
  }
  return stats;
}

VerificationReport run_verify(const std::string& space_id, int m, int n, int samples,
                              std::uint64_t seed, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  default_parameters(space_id, m, n);
  const auto family = default_candidates(space_id, m, n, seed);
  const auto stats = eigen_residuals(family, samples, seed);
  VerificationReport r;
  r.space = space_name(family.front().space);
  r.candidate = family.size() > 1 ? family.front().family_tag + " family alpha=1"
                                  : family.front().field.label;
  r.samples = samples;
  r.tolerance = tol;
  r.max_tau_residual = stats.max_tau;
  r.max_kappa_residual = stats.max_kappa;
  r.max_cross_residual = stats.max_cross;
  r.seed = seed;
  r.passed = stats.max_tau <= tol && stats.max_kappa <= tol && stats.max_cross <= tol;
  r.wall_time_ms = elapsed_ms(t0);
  return r;
}

std::string killing_to_json(const KillingReport& r) {
  json j;
  j["group"] = r.group;
  j["n"] = r.n;
  j["pairs"] = r.pairs;
  j["tolerance"] = r.tolerance;
  j["max_relative_deviation"] = r.max_relative_deviation;
  j["seed"] = r.seed;
  j["passed"] = r.passed;
  j["wall_time_ms"] = r.wall_time_ms;
  return j.dump();
}

KillingReport run_killing(const std::string& group, int n) {
  const auto t0 = std::chrono::steady_clock::now();
  GroupSpec g{GroupFamily::U, n};
  if (group == "so") g = so_group(n);
  else if (group == "u") g = u_group(n);
  else if (group == "su") g = su_group(n);
  else if (group == "sp") g = sp_group(n);
  else throw std::invalid_argument("unknown group family '" + group + "'");
  if (algebra_dim(g) < 1)
    throw std::invalid_argument("killing: " + group_name(g) + " has a trivial algebra");
  KillingReport r;
  r.group = group;
  r.n = n;
  r.pairs = 50;
  r.tolerance = 1e-9;
  r.seed = 0xC0FFEEull;
  Rng rng(r.seed ^ (0x9e3779b97f4a7c15ull * std::uint64_t(n + 17 * int(g.family))));
  for (int i = 0; i < r.pairs; ++i) {
    const CMat x = sample_algebra_element(g, rng);
    const CMat y = sample_algebra_element(g, rng);
    const double closed = killing_form(g, x, y);
    const double brute = killing_form_bruteforce(g, x, y);
    r.max_relative_deviation =
        std::max(r.max_relative_deviation, std::abs(closed - brute) / (1.0 + std::abs(brute)));
  }
  r.passed = r.max_relative_deviation <= r.tolerance;
  r.wall_time_ms = elapsed_ms(t0);
  return r;
}

std::string pharmonic_to_json(const PharmonicReport& r) {
  json j;
  j["lambda"] = {r.lambda.real(), r.lambda.imag()};
  j["mu"] = {r.mu.real(), r.mu.imag()};
  j["p"] = r.p;
  j["case"] = r.case_name;
  j["expression"] = r.expression;
  j["trace"] = r.trace;
  j["passed"] = r.passed;
  return j.dump();
}

PharmonicReport run_pharmonic(Complex lambda, Complex mu, int p) {
  PharmonicReport r;
  r.lambda = lambda;
  r.mu = mu;
  r.p = p;
  r.case_name = p_harmonic_case(lambda, mu);
  LogPowerExpression e = p_harmonic_function(lambda, mu, p, 1.0, 1.0);
  r.expression = to_string(e);
  bool proper = true;
  for (int k = 1; k <= p; ++k) {
    if (k == p) proper = proper && !e.is_zero();
    e = tension_reduce(e, lambda, mu);
    r.trace.push_back(to_string(e));
  }
  r.passed = proper && e.is_zero();
  return r;
}

std::string export_to_json(const ExportSummary& r) {
  json j;
  j["space"] = r.space;
  j["candidate"] = r.candidate;
  j["points"] = r.points;
  j["seed"] = r.seed;
  j["out"] = r.out;
  return j.dump();
}

ExportSummary run_export(const std::string& space_id, int m, int n, const std::string& candidate,
                         int points, std::uint64_t seed, const std::string& out_path) {
  default_parameters(space_id, m, n);
  if (points < 0) throw std::invalid_argument("export: negative point count");
  const auto family = default_candidates(space_id, m, n, seed);
  const EigenCandidate* chosen = nullptr;
  for (const EigenCandidate& c : family)
    if (c.field.label == candidate) chosen = &c;
  if (chosen == nullptr) {
    std::string known;
    for (const EigenCandidate& c : family) known += " " + c.field.label;
    throw std::invalid_argument("candidate '" + candidate + "' is not defined on " + space_id +
                                "; available:" + known);
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("export: cannot open '" + out_path + "' for writing");
  out << "# " << space_id << " " << candidate << " " << seed << "\n";
  char line[128];
  for (int i = 0; i < points; ++i) {
    const CMat p = sample_ambient_point(chosen->space, mix_seed(seed, i, 0));
    const Complex v = chosen->field.eval_plain(p);
    std::snprintf(line, sizeof line, "%d\t%.17g\t%.17g\n", i, v.real(), v.imag());
    out << line;
  }
  return {space_id, candidate, points, seed, out_path};
}

}  // namespace cartan
