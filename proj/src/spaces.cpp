#include "cartan/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace cartan {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_member(const SpaceSpec& s, const CMat& p, const char* what) {
  if (ambient_membership_residual(s, p) > 1e-8)
    throw std::invalid_argument(std::string(what) + ": not a member of the ambient group of " +
                                space_name(s));
}

CMat swap_permutation(int half) {
  CMat p(2 * half, 2 * half);
  for (int i = 0; i < half; ++i) {
    p(i, i + half) = 1.0;
    p(i + half, i) = 1.0;
  }
  return p;
}

}  // namespace

SpaceSpec complex_grassmannian(int m, int n) {
  require(m >= 1 && n >= 1, "complex Grassmannian needs m, n >= 1");
  return {SpaceFamily::ComplexGrassmannian, m, n};
}
SpaceSpec real_grassmannian(int m, int n) {
  require(m >= 1 && n >= 1, "real Grassmannian needs m, n >= 1");
  return {SpaceFamily::RealGrassmannian, m, n};
}
SpaceSpec quaternionic_grassmannian(int m, int n) {
  require(m >= 1 && n >= 1, "quaternionic Grassmannian needs m, n >= 1");
  return {SpaceFamily::QuaternionicGrassmannian, m, n};
}
SpaceSpec su_so_space(int n) {
  require(n >= 2, "SU(n)/SO(n) needs n >= 2");
  return {SpaceFamily::SU_SO, 0, n};
}
SpaceSpec so2n_u_space(int n) {
  require(n >= 1, "SO(2n)/U(n) needs n >= 1");
  return {SpaceFamily::SO2n_U, 0, n};
}
SpaceSpec sp_u_space(int n) {
  require(n >= 1, "Sp(n)/U(n) needs n >= 1");
  return {SpaceFamily::Sp_U, 0, n};
}
SpaceSpec su2n_sp_space(int n) {
  require(n >= 1, "SU(2n)/Sp(n) needs n >= 1");
  return {SpaceFamily::SU2n_Sp, 0, n};
}
SpaceSpec group_type_space(const GroupSpec& g) {
  return {SpaceFamily::GroupType, 0, 0, g};
}

std::string space_name(const SpaceSpec& s) {
  const std::string m = std::to_string(s.m), n = std::to_string(s.n);
  switch (s.family) {
    case SpaceFamily::ComplexGrassmannian:
      return "U(" + std::to_string(s.m + s.n) + ")/U(" + m + ")xU(" + n + ")";
    case SpaceFamily::RealGrassmannian:
      return "SO(" + std::to_string(s.m + s.n) + ")/SO(" + m + ")xSO(" + n + ")";
    case SpaceFamily::QuaternionicGrassmannian:
      return "Sp(" + std::to_string(s.m + s.n) + ")/Sp(" + m + ")xSp(" + n + ")";
    case SpaceFamily::SU_SO: return "SU(" + n + ")/SO(" + n + ")";
    case SpaceFamily::SO2n_U: return "SO(" + std::to_string(2 * s.n) + ")/U(" + n + ")";
    case SpaceFamily::Sp_U: return "Sp(" + n + ")/U(" + n + ")";
    case SpaceFamily::SU2n_Sp: return "SU(" + std::to_string(2 * s.n) + ")/Sp(" + n + ")";
    case SpaceFamily::GroupType: {
      const std::string g = group_name(s.factor);
      return g + "x" + g + "/diag";
    }
  }
  return "?";
}

bool has_group_ambient(const SpaceSpec& s) { return s.family != SpaceFamily::GroupType; }

GroupSpec ambient_group(const SpaceSpec& s) {
  switch (s.family) {
    case SpaceFamily::ComplexGrassmannian: return u_group(s.m + s.n);
    case SpaceFamily::RealGrassmannian: return so_group(s.m + s.n);
    case SpaceFamily::QuaternionicGrassmannian: return sp_group(s.m + s.n);
    case SpaceFamily::SU_SO: return su_group(s.n);
    case SpaceFamily::SO2n_U: return so_group(2 * s.n);
    case SpaceFamily::Sp_U: return sp_group(s.n);
    case SpaceFamily::SU2n_Sp: return su_group(2 * s.n);
    case SpaceFamily::GroupType:
      throw std::invalid_argument("group-type ambient is a product, not a single group");
  }
  throw std::invalid_argument("unknown space family");
}

int ambient_matrix_dim(const SpaceSpec& s) {
  if (s.family == SpaceFamily::GroupType) return 2 * matrix_dim(s.factor);
  return matrix_dim(ambient_group(s));
}

std::vector<CMat> ambient_algebra_basis(const SpaceSpec& s) {
  if (s.family == SpaceFamily::GroupType) {
    const auto fb = algebra_basis(s.factor).elements;
    const int d = matrix_dim(s.factor);
    const CMat zero(d, d);
    std::vector<CMat> out;
    out.reserve(2 * fb.size());
    for (const CMat& x : fb) out.push_back(block_diag(x, zero));
    for (const CMat& x : fb) out.push_back(block_diag(zero, x));
    return out;
  }
  return algebra_basis(ambient_group(s)).elements;
}

double ambient_membership_residual(const SpaceSpec& s, const CMat& p) {
  if (s.family == SpaceFamily::GroupType) {
    const int d = matrix_dim(s.factor);
    if (p.rows() != 2 * d || p.cols() != 2 * d)
      throw std::invalid_argument("group-type element has wrong dimension");
    const double ra = membership_residual(s.factor, block(p, 0, 0, d, d));
    const double rb = membership_residual(s.factor, block(p, d, d, d, d));
    const double off = std::max(frobenius_norm(block(p, 0, d, d, d)),
                                frobenius_norm(block(p, d, 0, d, d)));
    return std::max({ra, rb, off});
  }
  return membership_residual(ambient_group(s), p);
}

double ambient_algebra_residual(const SpaceSpec& s, const CMat& x) {
  if (s.family == SpaceFamily::GroupType) {
    const int d = matrix_dim(s.factor);
    if (x.rows() != 2 * d || x.cols() != 2 * d)
      throw std::invalid_argument("group-type algebra element has wrong dimension");
    const double ra = algebra_residual(s.factor, block(x, 0, 0, d, d));
    const double rb = algebra_residual(s.factor, block(x, d, d, d, d));
    const double off = std::max(frobenius_norm(block(x, 0, d, d, d)),
                                frobenius_norm(block(x, d, 0, d, d)));
    return std::max({ra, rb, off});
  }
  return algebra_residual(ambient_group(s), x);
}

CMat sample_ambient_point(const SpaceSpec& s, std::uint64_t seed) {
  if (s.family == SpaceFamily::GroupType) {
    const CMat a = sample_group_element(s.factor, seed);
    const CMat b = sample_group_element(s.factor, seed ^ 0x9e3779b97f4a7c15ull);
    return block_diag(a, b);
  }
  return sample_group_element(ambient_group(s), seed);
}

CMat sample_ambient_algebra(const SpaceSpec& s, std::uint64_t seed) {
  if (s.family == SpaceFamily::GroupType) {
    const CMat a = sample_algebra_element(s.factor, seed);
    const CMat b = sample_algebra_element(s.factor, seed ^ 0x9e3779b97f4a7c15ull);
    return block_diag(a, b);
  }
  return sample_algebra_element(ambient_group(s), seed);
}

namespace detail {

CMat involution_conjugator(const SpaceSpec& s) {
  switch (s.family) {
    case SpaceFamily::ComplexGrassmannian:
    case SpaceFamily::RealGrassmannian:
      return signature_matrix(s.m, s.n);
    case SpaceFamily::QuaternionicGrassmannian: {
      const CMat k = signature_matrix(s.m, s.n);
      return block_diag(k, k);
    }
    case SpaceFamily::GroupType:
      return swap_permutation(matrix_dim(s.factor));
    default:
      throw std::invalid_argument("space involution is not a plain conjugation");
  }
}

}  // namespace detail

CMat involution(const SpaceSpec& s, const CMat& p) {
  check_member(s, p, "involution");
  return detail::apply_involution(s, p);
}

CMat cartan_map(const SpaceSpec& s, const CMat& p) {
  check_member(s, p, "cartan_map");
  return cartan_map_matrix(s, p);
}

int p_dim(const SpaceSpec& s) {
  switch (s.family) {
    case SpaceFamily::ComplexGrassmannian: return 2 * s.m * s.n;
    case SpaceFamily::RealGrassmannian: return s.m * s.n;
    case SpaceFamily::QuaternionicGrassmannian: return 4 * s.m * s.n;
    case SpaceFamily::SU_SO: return (s.n - 1) * (s.n + 2) / 2;
    case SpaceFamily::SO2n_U: return s.n * (s.n - 1);
    case SpaceFamily::Sp_U: return s.n * (s.n + 1);
    case SpaceFamily::SU2n_Sp: return 2 * s.n * s.n - s.n - 1;
    case SpaceFamily::GroupType: return algebra_dim(s.factor);
  }
  return 0;
}

namespace {

// Projects the ambient basis onto a dsigma eigenspace and re-orthonormalizes
// by modified Gram-Schmidt, keeping the ambient (lexicographic) order.
std::vector<CMat> eigenspace_basis(const SpaceSpec& s, double eigen_sign) {
  std::vector<CMat> out;
  for (const CMat& e : ambient_algebra_basis(s)) {
    CMat w = 0.5 * (e + eigen_sign * dsigma(s, e));
    for (const CMat& u : out) w -= frobenius_inner(u, w) * u;
    const double nw = std::sqrt(std::max(frobenius_inner(w, w), 0.0));
    if (nw < 1e-6) continue;
    w *= Complex(1.0 / nw);
    out.push_back(w);
  }
  return out;
}

}  // namespace

PBasis p_basis(const SpaceSpec& s) { return {s, eigenspace_basis(s, -1.0)}; }

std::vector<CMat> k_basis(const SpaceSpec& s) { return eigenspace_basis(s, +1.0); }

CartanResiduals cartan_identity_residuals(const SpaceSpec& s, const CMat& p, const CMat& q) {
  check_member(s, p, "cartan_identity_residuals");
  check_member(s, q, "cartan_identity_residuals");
  const CMat phip = cartan_map_matrix(s, p);
  const CMat phiq = cartan_map_matrix(s, q);
  const CMat phip_inv = inverse(phip);
  const double r1 = frobenius_norm(detail::apply_involution(s, phip) - phip_inv);
  const double r2 = frobenius_norm(cartan_map_matrix(s, detail::apply_involution(s, p)) - phip_inv);
  const double r3 = frobenius_norm(phip * phiq * phip - cartan_map_matrix(s, phip * q));
  return {std::max(r1, r2), r3};
}

CMat differential_of_cartan(const SpaceSpec& s, const CMat& p, const CMat& x) {
  check_member(s, p, "differential_of_cartan");
  if (ambient_algebra_residual(s, x) > 1e-8)
    throw std::invalid_argument("differential_of_cartan: X is not in the ambient algebra");
  return jet_coefficient(cartan_map_matrix(s, jet_curve(p, x)), 1);
}

std::vector<SpaceSpec> registry_defaults() {
  return {
      complex_grassmannian(1, 1),      complex_grassmannian(1, 2),
      complex_grassmannian(2, 2),      real_grassmannian(2, 1),
      real_grassmannian(2, 2),         quaternionic_grassmannian(1, 1),
      quaternionic_grassmannian(1, 2), su_so_space(2),
      su_so_space(3),                  so2n_u_space(2),
      so2n_u_space(3),                 sp_u_space(1),
      sp_u_space(2),                   su2n_sp_space(2),
      group_type_space(su_group(2)),   group_type_space(so_group(3)),
  };
}

}  // namespace cartan
