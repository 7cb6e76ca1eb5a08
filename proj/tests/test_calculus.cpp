#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartan/fields.hpp"
#include "cartan/rng.hpp"

using namespace cartan;

namespace {

// Fields evaluated both ways must agree on constant jets.
void check_embedding_consistency(const ScalarField& f, const CMat& p) {
  const Jet v = f.eval_jet(promote(p));
  CHECK(std::abs(v.v0 - f.eval_plain(p)) < 1e-15);
  CHECK(v.v1 == Complex(0.0));
  CHECK(v.v2 == Complex(0.0));
}

std::vector<CMat> rotated_basis(const std::vector<CMat>& basis, std::uint64_t seed) {
  // random orthogonal mix of the frame, via Gram-Schmidt on Gaussian rows
  const int d = int(basis.size());
  Rng rng(seed);
  std::vector<std::vector<double>> rows;
  while (int(rows.size()) < d) {
    std::vector<double> v(d);
    for (int k = 0; k < d; ++k) v[k] = rng.gaussian();
    for (const auto& u : rows) {
      double dot = 0.0;
      for (int k = 0; k < d; ++k) dot += u[k] * v[k];
      for (int k = 0; k < d; ++k) v[k] -= dot * u[k];
    }
    double nv = 0.0;
    for (int k = 0; k < d; ++k) nv += v[k] * v[k];
    nv = std::sqrt(nv);
    if (nv < 1e-8) continue;
    for (int k = 0; k < d; ++k) v[k] /= nv;
    rows.push_back(v);
  }
  std::vector<CMat> out;
  for (int i = 0; i < d; ++i) {
    CMat x(basis.front().rows(), basis.front().cols());
    for (int k = 0; k < d; ++k) x += rows[i][k] * basis[k];
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("tension of constants and of U(1) coordinates") {
  const GroupSpec u1 = u_group(1);
  const CMat p = sample_group_element(u1, 4);
  CHECK(std::abs(tension(constant_field(Complex(2.0, -3.0)), u1, p)) < 1e-15);

  // G = U(1), f = z11: tau(f)(p) = -p11, kappa(f,f)(p) = -p11^2
  const ScalarField f = coordinate_field(0, 0);
  CHECK(std::abs(tension(f, u1, p) + p(0, 0)) < 1e-14);
  CHECK(std::abs(conformality(f, f, u1, p) + p(0, 0) * p(0, 0)) < 1e-14);
  CHECK(std::abs(conformality(f, constant_field(1.0), u1, p)) < 1e-15);

  check_embedding_consistency(f, p);
}

TEST_CASE("tension of a coordinate on SU(2) at the identity") {
  // Frozen from the closed form tau(z_jj) = -(n^2-1)/n z_jj on SU(n):
  // at e the value is -3/2 for n = 2.
  const GroupSpec g = su_group(2);
  const Complex tau = tension(coordinate_field(0, 0), g, cidentity(2));
  CHECK(std::abs(tau - Complex(-1.5)) < 1e-13);
}

TEST_CASE("conformality is symmetric and bilinear") {
  const GroupSpec g = u_group(2);
  const CMat p = sample_group_element(g, 9);
  const ScalarField f = coordinate_field(0, 1);
  const ScalarField h = conj_coordinate_field(1, 1);
  CHECK(std::abs(conformality(f, h, g, p) - conformality(h, f, g, p)) < 1e-15);
  const Complex a{0.3, -1.2}, b{2.0, 0.7};
  const ScalarField lin = field_linear_combination(a, f, b, h);
  const Complex lhs = conformality(lin, f, g, p);
  const Complex rhs = a * conformality(f, f, g, p) + b * conformality(h, f, g, p);
  CHECK(std::abs(lhs - rhs) < 1e-13);
}

TEST_CASE("linearity of the tension field") {
  const GroupSpec g = su_group(3);
  Rng rng(15);
  for (int trial = 0; trial < 5; ++trial) {
    const CMat p = sample_group_element(g, 700 + trial);
    const ScalarField f = coordinate_field(0, 2);
    const ScalarField h = conj_coordinate_field(1, 0);
    const Complex a = rng.complex_gaussian(), b = rng.complex_gaussian();
    const Complex lhs = tension(field_linear_combination(a, f, b, h), g, p);
    const Complex rhs = a * tension(f, g, p) + b * tension(h, g, p);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("left translations are isometries") {
  const GroupSpec g = u_group(3);
  const ScalarField f = coordinate_field(1, 2);
  for (int trial = 0; trial < 5; ++trial) {
    const CMat p = sample_group_element(g, 20 + trial);
    const CMat q = sample_group_element(g, 40 + trial);
    const Complex lhs = tension(left_translate(f, q), g, p);
    const Complex rhs = tension(f, g, q * p);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("tension is basis independent") {
  const GroupSpec g = su_group(3);
  const auto basis = algebra_basis(g).elements;
  const ScalarField f = coordinate_field(0, 1);
  for (int trial = 0; trial < 3; ++trial) {
    const CMat p = sample_group_element(g, 60 + trial);
    const Complex t0 = tension(f, basis, p);
    const Complex t1 = tension(f, rotated_basis(basis, 90 + trial), p);
    CHECK(std::abs(t0 - t1) <= 1e-9 * (1.0 + std::abs(t0)));
  }
}

TEST_CASE("restricted operators match the composite full-basis path") {
  for (const SpaceSpec& s : registry_defaults()) {
    CAPTURE(space_name(s));
    if (p_dim(s) == 0) continue;
    const ScalarField f = coordinate_field(0, ambient_matrix_dim(s) - 1);
    const ScalarField h = coordinate_field(0, 0);
    const ScalarField f_phi = compose_with_cartan(f, s);
    const ScalarField h_phi = compose_with_cartan(h, s);
    for (std::uint64_t seed : {5ull, 6ull}) {
      const CMat p = sample_ambient_point(s, seed);
      // constants restrict to zero
      CHECK(std::abs(tension_restricted(constant_field(1.0), s, p)) < 1e-15);
      // dual code paths agree
      const Complex full = tension(f_phi, s, p);
      const Complex restricted = tension_restricted(f, s, p);
      CHECK(std::abs(full - restricted) <= 1e-10 * (1.0 + std::abs(full)));
      const Complex kfull = conformality(f_phi, h_phi, s, p);
      const Complex krestricted = conformality_restricted(f, h, s, p);
      CHECK(std::abs(kfull - krestricted) <= 1e-10 * (1.0 + std::abs(kfull)));
      // symmetry of the restricted conformality
      CHECK(std::abs(krestricted - conformality_restricted(h, f, s, p)) <= 1e-12);
    }
  }
}

TEST_CASE("composition relations: tau(f o Phi) = 4 tau_N(f) o Phi") {
  for (const SpaceSpec& s : registry_defaults()) {
    CAPTURE(space_name(s));
    if (p_dim(s) == 0) continue;
    const ScalarField f = coordinate_field(0, ambient_matrix_dim(s) - 1);
    const ScalarField f_phi = compose_with_cartan(f, s);
    for (int i = 0; i < 20; ++i) {
      const CMat p = sample_ambient_point(s, 1000 + i);
      const Complex lhs = tension(f_phi, s, p);
      const Complex tau_n = tension_on_image(f, s, p);
      CHECK(std::abs(lhs - 4.0 * tau_n) <= 1e-9 * (1.0 + std::abs(lhs)));
      const Complex klhs = conformality(f_phi, f_phi, s, p);
      const Complex kappa_n = conformality_on_image(f, f, s, p);
      CHECK(std::abs(klhs - 4.0 * kappa_n) <= 1e-9 * (1.0 + std::abs(klhs)));
    }
  }
}

TEST_CASE("product rule") {
  const GroupSpec g = u_group(2);
  const auto basis = algebra_basis(g).elements;
  Rng rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const CMat p = sample_group_element(g, 500 + trial);
    const ScalarField f = coordinate_field(int(rng.raw() % 2), int(rng.raw() % 2));
    const ScalarField h = conj_coordinate_field(int(rng.raw() % 2), int(rng.raw() % 2));
    CHECK(product_rule_residual(f, h, basis, p) < 1e-9);
    CHECK(product_rule_residual(f, constant_field(3.0), basis, p) < 1e-12);
    // f = h special case: tau(f^2) = 2 f tau(f) + 2 kappa(f,f)
    CHECK(product_rule_residual(f, f, basis, p) < 1e-9);
  }
}

TEST_CASE("singular evaluation reports the offending direction") {
  const GroupSpec g = u_group(2);
  const ScalarField bad = make_field("1/(z11-1)", [](const auto& m) {
    using S = std::decay_t<decltype(m(0, 0) * m(0, 0))>;
    return S(Complex(1.0)) / (m(0, 0) - Complex(1.0));
  });
  // at p = e the curve value part sits exactly on the singularity
  CHECK_THROWS_AS(tension(bad, g, cidentity(2)), EvaluationError);
  try {
    tension(bad, g, cidentity(2));
  } catch (const EvaluationError& e) {
    CHECK(e.direction >= 0);
  }
}
