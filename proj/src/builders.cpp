#include "cartan/builders.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cartan {

namespace {

bool term_key_less(const LogPowerTerm& a, const LogPowerTerm& b) {
  if (a.exponent.real() != b.exponent.real()) return a.exponent.real() < b.exponent.real();
  if (a.exponent.imag() != b.exponent.imag()) return a.exponent.imag() < b.exponent.imag();
  return a.log_power < b.log_power;
}

// Snap coefficients that cancel only to round-off; `scale` is the sum of
// the magnitudes entering the cancellation.
Complex snap(Complex z, double scale) {
  return std::abs(z) <= 1e-12 * scale ? Complex(0.0) : z;
}

std::string fmt_complex(Complex z) {
  std::ostringstream os;
  if (z.imag() == 0.0) {
    os << z.real();
  } else {
    os << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
  }
  return os.str();
}

void check_branch(Complex phi) {
  if (phi.imag() == 0.0 && phi.real() <= 0.0)
    throw std::domain_error("log-power evaluation on the branch cut (-inf, 0]");
}

template <class S>
S int_pow(const S& x, int k) {
  S r = S(Complex(1.0));
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

}  // namespace

LogPowerExpression make_expression(std::vector<LogPowerTerm> terms) {
  std::sort(terms.begin(), terms.end(), term_key_less);
  LogPowerExpression out;
  for (const LogPowerTerm& t : terms) {
    if (t.coeff == Complex(0.0)) continue;
    if (!out.terms.empty()) {
      LogPowerTerm& last = out.terms.back();
      if (last.exponent == t.exponent && last.log_power == t.log_power) {
        const double scale = std::abs(last.coeff) + std::abs(t.coeff);
        last.coeff = snap(last.coeff + t.coeff, scale);
        if (last.coeff == Complex(0.0)) out.terms.pop_back();
        continue;
      }
    }
    out.terms.push_back(t);
  }
  return out;
}

std::string to_string(const LogPowerExpression& e) {
  if (e.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const LogPowerTerm& t : e.terms) {
    if (!first) os << " + ";
    first = false;
    os << fmt_complex(t.coeff);
    if (t.exponent != Complex(0.0)) os << "*x^" << fmt_complex(t.exponent);
    if (t.log_power > 0) os << "*log(x)^" << t.log_power;
  }
  return os.str();
}

LogPowerExpression tension_reduce(const LogPowerExpression& e, Complex lambda, Complex mu) {
  std::vector<LogPowerTerm> out;
  for (const LogPowerTerm& t : e.terms) {
    const Complex s = t.exponent;
    const int k = t.log_power;
    const Complex a = lambda * s;
    const Complex b = mu * s * (s - 1.0);
    const Complex same = snap(a + b, std::abs(a) + std::abs(b));
    if (same != Complex(0.0)) out.push_back({t.coeff * same, s, k});
    if (k >= 1) {
      const Complex c = lambda;
      const Complex d = mu * (2.0 * s - 1.0);
      const Complex down1 = snap(c + d, std::abs(c) + std::abs(d));
      if (down1 != Complex(0.0)) out.push_back({t.coeff * double(k) * down1, s, k - 1});
    }
    if (k >= 2) {
      const Complex down2 = mu * double(k) * double(k - 1);
      if (down2 != Complex(0.0)) out.push_back({t.coeff * down2, s, k - 2});
    }
  }
  return make_expression(std::move(out));
}

std::string p_harmonic_case(Complex lambda, Complex mu) {
  if (mu == Complex(0.0)) return "mu = 0";
  if (lambda == mu) return "mu != 0, lambda = mu";
  return "mu != 0, lambda != mu";
}

LogPowerExpression p_harmonic_function(Complex lambda, Complex mu, int p, Complex c1, Complex c2) {
  if (lambda == Complex(0.0) && mu == Complex(0.0))
    throw std::invalid_argument("p_harmonic_function: lambda and mu are both zero");
  if (c1 == Complex(0.0) && c2 == Complex(0.0))
    throw std::invalid_argument("p_harmonic_function: c1 and c2 are both zero");
  if (p < 1) throw std::invalid_argument("p_harmonic_function: p must be positive");
  std::vector<LogPowerTerm> terms;
  if (mu == Complex(0.0)) {
    // only c1 enters this case; c1 = 0 would produce the zero function
    if (c1 == Complex(0.0))
      throw std::invalid_argument("p_harmonic_function: the mu = 0 case needs c1 != 0");
    terms.push_back({c1, 0.0, p - 1});
  } else if (lambda == mu) {
    terms.push_back({c1, 0.0, 2 * p - 1});
    terms.push_back({c2, 0.0, 2 * p - 2});
  } else {
    // Stated in the source as "mu != 0, lambda != 0"; the reduction only
    // annihilates it under lambda != mu, which is how the cases partition.
    terms.push_back({c1, 1.0 - lambda / mu, p - 1});
    terms.push_back({c2, 0.0, p - 1});
  }
  return make_expression(std::move(terms));
}

Complex evaluate_log_power(const LogPowerExpression& e, Complex phi) {
  check_branch(phi);
  const Complex lg = std::log(phi);
  Complex sum = 0.0;
  for (const LogPowerTerm& t : e.terms)
    sum += t.coeff * std::exp(t.exponent * lg) * int_pow(lg, t.log_power);
  return sum;
}

Jet evaluate_log_power(const LogPowerExpression& e, const Jet& phi) {
  check_branch(phi.v0);
  const Jet lg = log(phi);
  Jet sum;
  for (const LogPowerTerm& t : e.terms)
    sum += t.coeff * exp(t.exponent * lg) * int_pow(lg, t.log_power);
  return sum;
}

Complex evaluate_log_power(const LogPowerExpression& e, const EigenCandidate& base,
                           const CMat& point) {
  return evaluate_log_power(e, base.field.eval_plain(point));
}

ScalarField compose_log_power(const LogPowerExpression& e, const ScalarField& phi) {
  return {"E(" + phi.label + ")",
          [e, phi](const CMat& m) { return evaluate_log_power(e, phi.eval_plain(m)); },
          [e, phi](const JMat& m) { return evaluate_log_power(e, phi.eval_jet(m)); }};
}

CMat embed_product(const ProductSpace& ps, const CMat& p1, const CMat& p2) {
  if (p1.rows() != ambient_matrix_dim(ps.left) || p2.rows() != ambient_matrix_dim(ps.right))
    throw std::invalid_argument("embed_product: factor dimensions do not match the spaces");
  if (ambient_membership_residual(ps.left, p1) > 1e-8 ||
      ambient_membership_residual(ps.right, p2) > 1e-8)
    throw std::invalid_argument("embed_product: a factor is not an ambient group member");
  return block_diag(p1, p2);
}

std::vector<CMat> product_ambient_basis(const ProductSpace& ps) {
  const int d1 = ambient_matrix_dim(ps.left);
  const int d2 = ambient_matrix_dim(ps.right);
  const CMat z1(d1, d1), z2(d2, d2);
  std::vector<CMat> out;
  for (const CMat& x : ambient_algebra_basis(ps.left)) out.push_back(block_diag(x, z2));
  for (const CMat& y : ambient_algebra_basis(ps.right)) out.push_back(block_diag(z1, y));
  return out;
}

CMat sample_product_point(const ProductSpace& ps, std::uint64_t seed) {
  const CMat p1 = sample_ambient_point(ps.left, seed);
  const CMat p2 = sample_ambient_point(ps.right, seed ^ 0xd1b54a32d192ed03ull);
  return block_diag(p1, p2);
}

ProductCandidate product_eigenfunction(const EigenCandidate& c1, const EigenCandidate& c2) {
  const int d1 = ambient_matrix_dim(c1.space);
  const int d2 = ambient_matrix_dim(c2.space);
  const ScalarField f1 = c1.field, f2 = c2.field;
  auto eval = [f1, f2, d1, d2](const auto& m) {
    const auto p1 = block(m, 0, 0, d1, d1);
    const auto p2 = block(m, d1, d1, d2, d2);
    return f1(p1) * f2(p2);
  };
  ScalarField field = {f1.label + " x " + f2.label,
                       [eval](const CMat& m) { return eval(m); },
                       [eval](const JMat& m) { return eval(m); }};
  return {std::move(field), c1.lambda + c2.lambda, c1.mu + c2.mu, {c1.space, c2.space}};
}

namespace {

void check_family_consistency(const std::vector<EigenCandidate>& family) {
  if (family.empty()) throw std::invalid_argument("empty eigenfamily");
  for (const EigenCandidate& c : family)
    if (c.lambda != family.front().lambda || c.mu != family.front().mu)
      throw std::invalid_argument("family members carry mixed eigenvalues");
}

int monomial_degree(const std::vector<int>& exps) {
  int d = 0;
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    d += e;
  }
  return d;
}

template <class S>
S eval_monomial(const std::vector<ScalarField>& fields, const std::vector<int>& exps,
                const Mat<S>& m) {
  S prod = S(Complex(1.0));
  for (size_t i = 0; i < exps.size(); ++i)
    for (int e = 0; e < exps[i]; ++e) prod = prod * fields[i](m);
  return prod;
}

std::string monomial_label(const std::vector<int>& exps) {
  std::string s = "m";
  for (int e : exps) s += "_" + std::to_string(e);
  return s;
}

template <class S>
S eval_polynomial(const std::vector<ScalarField>& fields, const PolynomialSpec& spec,
                  const Mat<S>& m) {
  S sum{};
  for (const auto& [coeff, exps] : spec.terms) sum += coeff * eval_monomial(fields, exps, m);
  return sum;
}

}  // namespace

std::vector<EigenCandidate> homogeneous_family(const std::vector<EigenCandidate>& family, int d,
                                               const std::vector<std::vector<int>>& monomials) {
  check_family_consistency(family);
  if (d < 1) throw std::invalid_argument("homogeneous_family: degree must be positive");
  std::vector<ScalarField> fields;
  for (const EigenCandidate& c : family) fields.push_back(c.field);
  const Complex lambda = family.front().lambda, mu = family.front().mu;
  const Complex new_lambda = double(d) * lambda + double(d) * double(d - 1) * mu;
  const Complex new_mu = double(d) * double(d) * mu;
  bool k_invariant = true;
  for (const EigenCandidate& c : family) k_invariant = k_invariant && c.k_invariant;
  std::vector<EigenCandidate> out;
  for (const auto& exps : monomials) {
    if (int(exps.size()) != int(family.size()))
      throw std::invalid_argument("monomial length does not match family size");
    if (monomial_degree(exps) != d)
      throw std::invalid_argument("monomial degree does not match d");
    auto eval = [fields, exps](const auto& m) { return eval_monomial(fields, exps, m); };
    out.push_back({make_field(monomial_label(exps), eval), new_lambda, new_mu,
                   family.front().space, family.front().family_tag + "-deg" + std::to_string(d),
                   k_invariant});
  }
  return out;
}

ScalarField harmonic_morphism_ratio(const std::vector<EigenCandidate>& family,
                                    const PolynomialSpec& p, const PolynomialSpec& q,
                                    double floor) {
  check_family_consistency(family);
  if (p.terms.empty() || q.terms.empty())
    throw std::invalid_argument("harmonic_morphism_ratio: empty polynomial");
  const int dp = monomial_degree(p.terms.front().second);
  if (dp < 1) throw std::invalid_argument("harmonic_morphism_ratio: degree must be positive");
  for (const auto& [c, e] : p.terms)
    if (monomial_degree(e) != dp) throw std::invalid_argument("P is not homogeneous");
  for (const auto& [c, e] : q.terms)
    if (monomial_degree(e) != dp)
      throw std::invalid_argument("P and Q must share one positive degree");
  // Proportional P and Q are accepted and give a constant field (harmonic,
  // though not a morphism in the interesting sense).
  std::vector<ScalarField> fields;
  for (const EigenCandidate& c : family) fields.push_back(c.field);
  auto eval = [fields, p, q, floor](const auto& m) {
    const auto num = eval_polynomial(fields, p, m);
    const auto den = eval_polynomial(fields, q, m);
    if (std::abs(value_part(den)) <= floor)
      throw SingularPointError("quotient field evaluated where |Q| <= floor");
    return num / den;
  };
  return make_field("P/Q", eval);
}

}  // namespace cartan
