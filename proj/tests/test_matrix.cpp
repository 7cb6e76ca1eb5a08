#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "cartan/groups.hpp"
#include "cartan/matrix.hpp"
#include "cartan/rng.hpp"

using namespace cartan;

namespace {

const double kPi = 3.14159265358979323846;

CMat random_cmat(int n, Rng& rng) {
  CMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.complex_gaussian();
  return a;
}

}  // namespace

TEST_CASE("mat_exp identity cases") {
  CHECK(frobenius_norm(mat_exp(CMat(2, 2)) - cidentity(2)) == 0.0);

  // planar rotation block against the cos/sin closed form
  CMat a(2, 2);
  a(0, 1) = kPi / 2;
  a(1, 0) = -kPi / 2;
  CMat expected(2, 2);
  expected(0, 1) = 1.0;
  expected(1, 0) = -1.0;
  CHECK(frobenius_norm(mat_exp(a) - expected) < 1e-14);

  // entrywise scalar exponential on a diagonal input
  CMat d(2, 2);
  d(0, 0) = Complex(0, kPi);
  d(1, 1) = Complex(0, -kPi);
  CHECK(frobenius_norm(mat_exp(d) + cidentity(2)) < 1e-14);

  CHECK_THROWS_AS(mat_exp(CMat(2, 3)), std::invalid_argument);
  CMat nan(2, 2);
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(mat_exp(nan), std::invalid_argument);
}

TEST_CASE("mat_exp of skew-Hermitian input is unitary") {
  Rng rng(5);
  for (int n : {2, 3, 5}) {
    CMat a = random_cmat(n, rng);
    a = 0.5 * (a - conj_transpose(a));
    const CMat u = mat_exp(a);
    CHECK(frobenius_norm(conj_transpose(u) * u - cidentity(n)) < 1e-12);
  }
}

TEST_CASE("mat_exp is multiplicative on commuting pairs") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    CMat a(4, 4), b(4, 4);
    for (int i = 0; i < 4; ++i) {
      a(i, i) = rng.complex_gaussian();
      b(i, i) = rng.complex_gaussian();
    }
    CHECK(frobenius_norm(mat_exp(a + b) - mat_exp(a) * mat_exp(b)) < 1e-12);
  }
}

TEST_CASE("frobenius_inner on the elementary generators") {
  // Y_rs = (E_rs - E_sr)/sqrt(2)
  const CMat y_by_hand =
      (1.0 / std::sqrt(2.0)) * (elem_E(3, 0, 1) - elem_E(3, 1, 0));
  CHECK(frobenius_norm(elem_Y(3, 0, 1) - y_by_hand) == 0.0);
  CHECK(frobenius_inner(elem_Y(3, 0, 1), elem_Y(3, 0, 1)) == doctest::Approx(1.0).epsilon(1e-15));
  const CMat ix = Complex(0, 1) * elem_X(3, 0, 1);
  CHECK(std::abs(frobenius_inner(elem_Y(3, 0, 1), ix)) < 1e-15);
  const CMat id1 = Complex(0, 1) * elem_D(3, 0);
  CHECK(frobenius_inner(id1, id1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(frobenius_inner(CMat(2, 2), CMat(3, 3)), std::invalid_argument);
}

TEST_CASE("jet_curve coefficients") {
  const CMat y = elem_Y(2, 0, 1);
  const JMat j = jet_curve(cidentity(2), y);
  CHECK(j(0, 1).v0 == Complex(0.0));
  CHECK(std::abs(j(0, 1).v1 - Complex(1.0 / std::sqrt(2.0))) < 1e-16);
  CHECK(j(0, 1).v2 == Complex(0.0));
  // Y12^2 = -(E11+E22)/2, so the (1,1) jet is (1, 0, -1/4)
  CHECK(j(0, 0).v0 == Complex(1.0));
  CHECK(j(0, 0).v1 == Complex(0.0));
  CHECK(std::abs(j(0, 0).v2 - Complex(-0.25)) < 1e-16);

  const JMat flat = jet_curve(cidentity(2), CMat(2, 2));
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      CHECK(flat(i, k).v1 == Complex(0.0));
      CHECK(flat(i, k).v2 == Complex(0.0));
    }
  CHECK_THROWS_AS(jet_curve(cidentity(2), CMat(3, 3)), std::invalid_argument);
}

TEST_CASE("lu determinant and inverse") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const CMat a = random_cmat(4, rng);
    const CMat ainv = inverse(a);
    CHECK(frobenius_norm(a * ainv - cidentity(4)) < 1e-11);
    CHECK(std::abs(det(a) * det(ainv) - 1.0) < 1e-10);
  }
  CHECK(std::abs(det(cidentity(3)) - 1.0) == 0.0);
}

TEST_CASE("jet matrix inverse tracks the curve inverse") {
  Rng rng(17);
  const GroupSpec g = u_group(3);
  const CMat p = sample_group_element(g, 99);
  const CMat x = sample_algebra_element(g, 100);
  const JMat z = jet_curve(p, x);
  const JMat zi = inverse(z);
  // (p exp(tX))^{-1} = exp(-tX) p^{-1} has jet (p^{-1}, -X p^{-1}, X^2 p^{-1} / 2)
  const CMat pinv = inverse(p);
  CHECK(frobenius_norm(jet_coefficient(zi, 0) - pinv) < 1e-12);
  CHECK(frobenius_norm(jet_coefficient(zi, 1) + x * pinv) < 1e-12);
  CHECK(frobenius_norm(jet_coefficient(zi, 2) - 0.5 * (x * x * pinv)) < 1e-12);
  // and equals the componentwise conjugate transpose for a unitary curve
  const JMat zct = conj_transpose(z);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(zct(i, j).v0 - zi(i, j).v0) < 1e-12);
      CHECK(std::abs(zct(i, j).v1 - zi(i, j).v1) < 1e-12);
      CHECK(std::abs(zct(i, j).v2 - zi(i, j).v2) < 1e-12);
    }
}

TEST_CASE("jet evaluation matches central differences of matrix curves") {
  // polynomial field in entries and conjugates, evaluated along p exp(tX)
  Rng rng(21);
  const GroupSpec g = u_group(3);
  const CMat p = sample_group_element(g, 1);
  const CMat x = sample_algebra_element(g, 2);
  auto f = [](const auto& m) {
    using std::conj;
    return m(0, 1) * conj(m(2, 1)) + m(1, 1) * m(0, 0) * conj(m(0, 2));
  };
  const Jet v = f(jet_curve(p, x));
  const double h = 1e-4;
  auto at = [&](double t) { return f(p * mat_exp(t * x)); };
  const Complex d1 = (at(h) - at(-h)) / (2 * h);
  const Complex d2 = (at(h) - 2.0 * at(0) + at(-h)) / (h * h);
  CHECK(std::abs(v.v1 - d1) < 1e-6);
  CHECK(std::abs(2.0 * v.v2 - d2) < 1e-6);
}
