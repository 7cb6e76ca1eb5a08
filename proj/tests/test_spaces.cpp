#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cartan/rng.hpp"
#include "cartan/spaces.hpp"

using namespace cartan;

namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<SpaceSpec> small_registry() { return registry_defaults(); }

// Projection residual of v onto the span of an orthonormal set.
double off_span_residual(const CMat& v, const std::vector<CMat>& span) {
  CMat rem = v;
  for (const CMat& u : span) rem -= frobenius_inner(u, rem) * u;
  return frobenius_norm(rem);
}

CMat fixed_subgroup_element(const SpaceSpec& s, std::uint64_t seed) {
  const auto kb = k_basis(s);
  Rng rng(seed);
  CMat x(ambient_matrix_dim(s), ambient_matrix_dim(s));
  for (const CMat& e : kb) x += rng.gaussian() * e;
  return mat_exp(x);
}

}  // namespace

TEST_CASE("involution is an exact involutive automorphism") {
  for (const SpaceSpec& s : small_registry()) {
    CAPTURE(space_name(s));
    for (std::uint64_t seed : {1ull, 2ull}) {
      const CMat p = sample_ambient_point(s, seed);
      const CMat q = sample_ambient_point(s, seed + 50);
      const CMat sp = involution(s, p);
      CHECK(ambient_membership_residual(s, sp) < 1e-9);
      CHECK(frobenius_norm(involution(s, sp) - p) == 0.0);  // sigma^2 = id, bit for bit
      // automorphism property
      CHECK(frobenius_norm(involution(s, p * q) - sp * involution(s, q)) < 1e-12);
    }
    CHECK(frobenius_norm(involution(s, cidentity(ambient_matrix_dim(s))) -
                         cidentity(ambient_matrix_dim(s))) == 0.0);
  }
}

TEST_CASE("involution fixes the subgroup K") {
  for (const SpaceSpec& s : small_registry()) {
    CAPTURE(space_name(s));
    if (p_dim(s) == 0) continue;
    const CMat k = fixed_subgroup_element(s, 77);
    CHECK(frobenius_norm(involution(s, k) - k) < 1e-10);
  }
}

TEST_CASE("block form of the complex Grassmannian involution") {
  // U(2)/U(1)xU(1): off-diagonal entries flip sign
  const SpaceSpec s = complex_grassmannian(1, 1);
  const CMat p = sample_ambient_point(s, 5);
  const CMat sp = involution(s, p);
  CHECK(sp(0, 0) == p(0, 0));
  CHECK(sp(1, 1) == p(1, 1));
  CHECK(sp(0, 1) == -p(0, 1));
  CHECK(sp(1, 0) == -p(1, 0));

  // SU(2)/SO(2): entrywise conjugation
  const SpaceSpec t = su_so_space(2);
  const CMat z = sample_ambient_point(t, 6);
  CHECK(frobenius_norm(involution(t, z) - conj_entries(z)) == 0.0);
}

TEST_CASE("p-basis integrity for all families") {
  for (const SpaceSpec& s : small_registry()) {
    CAPTURE(space_name(s));
    const auto pb = p_basis(s).elements;
    CHECK(int(pb.size()) == p_dim(s));
    for (size_t i = 0; i < pb.size(); ++i) {
      CHECK(frobenius_norm(dsigma(s, pb[i]) + pb[i]) < 1e-12);  // dsigma = -1
      CHECK(ambient_algebra_residual(s, pb[i]) < 1e-12);
      for (size_t j = 0; j < pb.size(); ++j) {
        const double expected = i == j ? 1.0 : 0.0;
        CHECK(std::abs(frobenius_inner(pb[i], pb[j]) - expected) <= 1e-12);
      }
    }
    // k-basis spans the +1 eigenspace; the two eigenspaces fill the algebra
    const auto kb = k_basis(s);
    CHECK(pb.size() + kb.size() == ambient_algebra_basis(s).size());
    for (const CMat& e : kb) CHECK(frobenius_norm(dsigma(s, e) - e) < 1e-12);
  }
}

TEST_CASE("p-basis spans match the explicit classical lists") {
  // U(m+n)/U(m)xU(n): {Y_rs, iX_rs | r <= m < s}
  {
    const int m = 2, n = 1;
    const SpaceSpec s = complex_grassmannian(m, n);
    std::vector<CMat> listed;
    for (int r = 0; r < m; ++r)
      for (int c = m; c < m + n; ++c) {
        listed.push_back(elem_Y(m + n, r, c));
        listed.push_back(kI * elem_X(m + n, r, c));
      }
    const auto pb = p_basis(s).elements;
    REQUIRE(pb.size() == listed.size());
    for (const CMat& v : listed) CHECK(off_span_residual(v, pb) < 1e-10);
  }
  // ComplexGrassmannian(1,1): exactly {Y12, iX12}
  {
    const auto pb = p_basis(complex_grassmannian(1, 1)).elements;
    REQUIRE(pb.size() == 2);
    CHECK(frobenius_norm(pb[0] - elem_Y(2, 0, 1)) < 1e-14);
    CHECK(frobenius_norm(pb[1] - kI * elem_X(2, 0, 1)) < 1e-14);
  }
  // RealGrassmannian(2,1): {Y13, Y23}
  {
    const auto pb = p_basis(real_grassmannian(2, 1)).elements;
    REQUIRE(pb.size() == 2);
    CHECK(frobenius_norm(pb[0] - elem_Y(3, 0, 2)) < 1e-14);
    CHECK(frobenius_norm(pb[1] - elem_Y(3, 1, 2)) < 1e-14);
  }
  // SO(2n)/U(n): {diag(Y, -Y)/sqrt2, offdiag(Y, Y)/sqrt2}
  {
    const int n = 3;
    const SpaceSpec s = so2n_u_space(n);
    std::vector<CMat> listed;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c) {
        const CMat y = elem_Y(n, r, c);
        listed.push_back(inv_sqrt2 * block_diag(y, -1.0 * y));
        CMat off(2 * n, 2 * n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            off(i, j + n) = inv_sqrt2 * y(i, j);
            off(i + n, j) = inv_sqrt2 * y(i, j);
          }
        listed.push_back(off);
      }
    const auto pb = p_basis(s).elements;
    REQUIRE(pb.size() == listed.size());
    for (const CMat& v : listed) CHECK(off_span_residual(v, pb) < 1e-10);
  }
  // SU(n)/SO(n): p is the orthogonal complement of span{Y_rs} + span{iI/sqrt(n)} in u(n)
  {
    const int n = 3;
    const auto pb = p_basis(su_so_space(n)).elements;
    for (const CMat& v : pb) {
      for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
          CHECK(std::abs(frobenius_inner(elem_Y(n, r, c), v)) < 1e-12);
      CHECK(std::abs(frobenius_inner((kI / std::sqrt(double(n))) * cidentity(n), v)) < 1e-12);
    }
  }
  // Sp(n)/U(n): the iX and iD blocks, diagonal and off-diagonal
  {
    const int n = 2;
    const auto pb = p_basis(sp_u_space(n)).elements;
    REQUIRE(int(pb.size()) == n * (n + 1));
    for (const CMat& v : pb) {
      // all elements are purely imaginary in the complex representation
      CMat re(v.rows(), v.cols());
      for (int i = 0; i < v.rows(); ++i)
        for (int j = 0; j < v.cols(); ++j) re(i, j) = v(i, j).real();
      CHECK(frobenius_norm(re) < 1e-14);
    }
  }
}

TEST_CASE("degenerate parameters give empty p-bases") {
  const SpaceSpec s = su2n_sp_space(1);  // SU(2) = Sp(1)
  CHECK(p_dim(s) == 0);
  CHECK(p_basis(s).elements.empty());
}

TEST_CASE("cartan map values") {
  // Phi(e) = e everywhere
  for (const SpaceSpec& s : small_registry()) {
    const int d = ambient_matrix_dim(s);
    CHECK(frobenius_norm(cartan_map(s, cidentity(d)) - cidentity(d)) < 1e-14);
  }
  // U(2)/U(1)xU(1) at the rotation by pi/2: Phi(p) = -I
  CMat p(2, 2);
  p(0, 1) = 1.0;
  p(1, 0) = -1.0;
  const CMat phi = cartan_map(complex_grassmannian(1, 1), p);
  CHECK(frobenius_norm(phi + cidentity(2)) < 1e-14);
  // non-member rejection
  CHECK_THROWS_AS(cartan_map(complex_grassmannian(1, 1), 2.0 * cidentity(2)),
                  std::invalid_argument);
}

TEST_CASE("cartan map factors through K and hits exp(2X)") {
  for (const SpaceSpec& s : small_registry()) {
    CAPTURE(space_name(s));
    if (p_dim(s) == 0) continue;
    const CMat p = sample_ambient_point(s, 11);
    // Phi(p k) = Phi(p)
    const CMat k = fixed_subgroup_element(s, 13);
    CHECK(frobenius_norm(cartan_map(s, p * k) - cartan_map(s, p)) < 1e-9);
    // Phi(exp X) = exp(2X) for X in p
    Rng rng(17);
    const auto pb = p_basis(s).elements;
    for (int trial = 0; trial < 20; ++trial) {
      CMat x(ambient_matrix_dim(s), ambient_matrix_dim(s));
      for (const CMat& e : pb) x += rng.gaussian() * e;
      CHECK(frobenius_norm(cartan_map(s, mat_exp(x)) - mat_exp(2.0 * x)) < 1e-9);
    }
  }
}

TEST_CASE("cartan identity residuals") {
  for (const SpaceSpec& s : small_registry()) {
    CAPTURE(space_name(s));
    const int d = ambient_matrix_dim(s);
    const CartanResiduals at_e = cartan_identity_residuals(s, cidentity(d), cidentity(d));
    CHECK(at_e.inversion < 1e-14);
    CHECK(at_e.braid < 1e-14);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const CMat p = sample_ambient_point(s, 100 + seed);
      const CMat q = sample_ambient_point(s, 200 + seed);
      const CartanResiduals r = cartan_identity_residuals(s, p, q);
      CHECK(r.inversion < 1e-10);
      CHECK(r.braid < 1e-10);
    }
    // p in K: Phi(p) = e
    if (p_dim(s) > 0) {
      const CMat k = fixed_subgroup_element(s, 23);
      CHECK(frobenius_norm(cartan_map(s, k) - cidentity(d)) < 1e-10);
    }
  }
}

TEST_CASE("differential of the cartan map") {
  for (const SpaceSpec& s : small_registry()) {
    CAPTURE(space_name(s));
    if (p_dim(s) == 0) continue;
    const int d = ambient_matrix_dim(s);
    const auto pb = p_basis(s).elements;
    const auto kb = k_basis(s);

    // fixed directions are killed
    if (!kb.empty())
      CHECK(frobenius_norm(differential_of_cartan(s, sample_ambient_point(s, 3), kb.front())) <
            1e-10);

    // at the identity, X in p maps to 2X
    CHECK(frobenius_norm(differential_of_cartan(s, cidentity(d), pb.front()) - 2.0 * pb.front()) <
          1e-12);

    // agreement with p X sigma(p^{-1}) - p dsigma(X) sigma(p^{-1}), both
    // for pure p-space directions and a generic algebra element
    const CMat p = sample_ambient_point(s, 31);
    const CMat sp_inv = inverse(involution(s, p));
    for (const CMat& x : {pb.front(), pb.back(), sample_ambient_algebra(s, 37)}) {
      const CMat expected = p * x * sp_inv - p * dsigma(s, x) * sp_inv;
      CHECK(frobenius_norm(differential_of_cartan(s, p, x) - expected) < 1e-10);
    }
  }
}

TEST_CASE("conformality factor 4 on the horizontal space") {
  for (const SpaceSpec& s : small_registry()) {
    CAPTURE(space_name(s));
    if (p_dim(s) == 0) continue;
    const auto pb = p_basis(s).elements;
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      const CMat p = sample_ambient_point(s, 300 + trial);
      CMat x(ambient_matrix_dim(s), ambient_matrix_dim(s));
      for (const CMat& e : pb) x += rng.gaussian() * e;
      const double nx = std::sqrt(frobenius_inner(x, x));
      x *= Complex(1.0 / nx);
      const CMat dphi = differential_of_cartan(s, p, x);
      CHECK(frobenius_inner(dphi, dphi) == doctest::Approx(4.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("group-type space swaps the factors") {
  const SpaceSpec s = group_type_space(su_group(2));
  const CMat a = sample_group_element(su_group(2), 1);
  const CMat b = sample_group_element(su_group(2), 2);
  const CMat pair = block_diag(a, b);
  const CMat swapped = involution(s, pair);
  CHECK(frobenius_norm(block(swapped, 0, 0, 2, 2) - b) == 0.0);
  CHECK(frobenius_norm(block(swapped, 2, 2, 2, 2) - a) == 0.0);
  // Phi(p, q) = (p q^{-1}, (p q^{-1})^{-1})
  const CMat phi = cartan_map(s, pair);
  const CMat pq = a * inverse(b);
  CHECK(frobenius_norm(block(phi, 0, 0, 2, 2) - pq) < 1e-12);
  CHECK(frobenius_norm(block(phi, 2, 2, 2, 2) - inverse(pq)) < 1e-12);
  CHECK(p_dim(s) == 3);
}
