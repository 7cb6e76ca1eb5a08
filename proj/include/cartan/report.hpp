#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartan/builders.hpp"
#include "cartan/catalog.hpp"

namespace cartan {

/// Machine-readable outcome of one verification run. `passed` holds exactly
/// when every recorded residual is at or below `tolerance`.
struct VerificationReport {
  std::string space;
  std::string candidate;
  int samples = 0;
  double tolerance = 0.0;
  double max_tau_residual = 0.0;
  double max_kappa_residual = 0.0;
  double max_cross_residual = 0.0;
  std::uint64_t seed = 0;
  bool passed = false;
  std::int64_t wall_time_ms = 0;
};

std::string report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const std::string& text);

/// Space ids accepted by the drivers: complex-grassmannian,
/// real-grassmannian, quaternionic-grassmannian, su-so, so-u, sp-u, su-sp.
bool known_space_id(const std::string& id);
SpaceSpec space_from_id(const std::string& id, int m, int n);
/// Default size parameters used when --m/--n are not given.
void default_parameters(const std::string& id, int& m, int& n);

/// The candidate set the verifier exercises for one space: an eigenfamily
/// for the Grassmannians (alpha = 1), a single seeded candidate elsewhere.
std::vector<EigenCandidate> default_candidates(const std::string& id, int m, int n,
                                               std::uint64_t seed);

struct ResidualStats {
  double max_tau = 0.0;
  double max_kappa = 0.0;
  double max_cross = 0.0;
};

/// Normalized eigen-residuals over seeded ambient points:
///   |tau(psi) - lambda psi| / (1 + |psi|),
///   |kappa(psi,psi) - mu psi^2| / (1 + |psi|^2),
/// and the pairwise cross-terms for families. Points where an evaluator
/// reports a singularity are resampled.
ResidualStats eigen_residuals(const std::vector<EigenCandidate>& family, int samples,
                              std::uint64_t seed);

VerificationReport run_verify(const std::string& space_id, int m, int n, int samples,
                              std::uint64_t seed, double tol);

struct KillingReport {
  std::string group;
  int n = 0;
  int pairs = 0;
  double tolerance = 0.0;
  double max_relative_deviation = 0.0;
  std::uint64_t seed = 0;
  bool passed = false;
  std::int64_t wall_time_ms = 0;
};

std::string killing_to_json(const KillingReport& r);
KillingReport run_killing(const std::string& group, int n);

struct PharmonicReport {
  Complex lambda;
  Complex mu;
  int p = 0;
  std::string case_name;
  std::string expression;
  std::vector<std::string> trace;  // tau^1 .. tau^p
  bool passed = false;
};

std::string pharmonic_to_json(const PharmonicReport& r);
PharmonicReport run_pharmonic(Complex lambda, Complex mu, int p);

struct ExportSummary {
  std::string space;
  std::string candidate;
  int points = 0;
  std::uint64_t seed = 0;
  std::string out;
};

std::string export_to_json(const ExportSummary& r);
/// Writes the sampled-values file (header line, then index / re / im rows).
ExportSummary run_export(const std::string& space_id, int m, int n, const std::string& candidate,
                         int points, std::uint64_t seed, const std::string& out_path);

/// Deterministic per-point seed stream (seed, index, resample attempt).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t attempt);

}  // namespace cartan
