#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cartan/catalog.hpp"
#include "cartan/fields.hpp"

namespace cartan {

/// A term c * x^s * log(x)^k of a formal log-power expression.
struct LogPowerTerm {
  Complex coeff;
  Complex exponent;
  int log_power = 0;
};

/// Finite sum of log-power terms, kept canonical: terms with equal
/// (exponent, log_power) merged, zero coefficients dropped, ordered by
/// (exponent, log_power).
struct LogPowerExpression {
  std::vector<LogPowerTerm> terms;

  bool is_zero() const { return terms.empty(); }
};

LogPowerExpression make_expression(std::vector<LogPowerTerm> terms);
std::string to_string(const LogPowerExpression& e);

/// Symbolic image of the expression under the tension field, given that the
/// base function is a (lambda, mu) eigenfunction:
///   tau(x^s log^k) = [ls + ms(s-1)] x^s log^k
///                  + k[l + m(2s-1)] x^s log^{k-1} + mk(k-1) x^s log^{k-2}.
/// Coefficients that cancel only to round-off are snapped to exact zero at
/// relative threshold 1e-12.
LogPowerExpression tension_reduce(const LogPowerExpression& e, Complex lambda, Complex mu);

/// The proper p-harmonic generator: an expression E with
/// tension_reduce^p(E) = 0 and tension_reduce^{p-1}(E) != 0, per eigenvalue
/// case (mu = 0; mu != 0, lambda = mu; mu != 0, lambda != mu).
LogPowerExpression p_harmonic_function(Complex lambda, Complex mu, int p, Complex c1, Complex c2);

/// Name of the eigenvalue case p_harmonic_function dispatches to.
std::string p_harmonic_case(Complex lambda, Complex mu);

/// Principal-branch value of the expression at a base value phi; requires
/// phi off the closed negative real axis.
Complex evaluate_log_power(const LogPowerExpression& e, Complex phi);
Jet evaluate_log_power(const LogPowerExpression& e, const Jet& phi);
Complex evaluate_log_power(const LogPowerExpression& e, const EigenCandidate& base,
                           const CMat& point);

/// The composite function E(phi(.)) as a scalar field.
ScalarField compose_log_power(const LogPowerExpression& e, const ScalarField& phi);

// --- product spaces ---------------------------------------------------

/// Riemannian product of two symmetric-space realizations; points are
/// block-diagonal pairs and the tangent frame is the concatenation of the
/// factor frames.
struct ProductSpace {
  SpaceSpec left;
  SpaceSpec right;
};

CMat embed_product(const ProductSpace& ps, const CMat& p1, const CMat& p2);
std::vector<CMat> product_ambient_basis(const ProductSpace& ps);
CMat sample_product_point(const ProductSpace& ps, std::uint64_t seed);

/// Eigen candidate over a product space.
struct ProductCandidate {
  ScalarField field;
  Complex lambda;
  Complex mu;
  ProductSpace space;
};

/// psi(p1, p2) = phi1(p1) phi2(p2); eigenvalues add.
ProductCandidate product_eigenfunction(const EigenCandidate& c1, const EigenCandidate& c2);

// --- polynomial constructions -----------------------------------------

/// Exponent multi-indices over a shared eigenfamily; every index must sum
/// to the common degree d. Produces candidates with eigenvalues
/// (d lambda + d(d-1) mu, d^2 mu).
std::vector<EigenCandidate> homogeneous_family(const std::vector<EigenCandidate>& family, int d,
                                               const std::vector<std::vector<int>>& monomials);

/// Sparse homogeneous polynomial in the family members.
struct PolynomialSpec {
  std::vector<std::pair<Complex, std::vector<int>>> terms;  // coefficient, exponents
};

/// Thrown when a quotient field is evaluated where |Q| is at or below the
/// configured floor.
struct SingularPointError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The quotient P(phi_1..phi_k)/Q(phi_1..phi_k) on {|Q| > floor}: a
/// harmonic morphism when P and Q are linearly independent of one positive
/// degree, the constant field when they are proportional.
ScalarField harmonic_morphism_ratio(const std::vector<EigenCandidate>& family,
                                    const PolynomialSpec& p, const PolynomialSpec& q,
                                    double floor = 1e-8);

}  // namespace cartan
