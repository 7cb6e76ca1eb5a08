#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartan/groups.hpp"
#include "cartan/matrix.hpp"

namespace cartan {

enum class SpaceFamily {
  ComplexGrassmannian,       // U(m+n) / U(m) x U(n)
  RealGrassmannian,          // SO(m+n) / SO(m) x SO(n)
  QuaternionicGrassmannian,  // Sp(m+n) / Sp(m) x Sp(n)
  SU_SO,                     // SU(n) / SO(n)
  SO2n_U,                    // SO(2n) / U(n)
  Sp_U,                      // Sp(n) / U(n)
  SU2n_Sp,                   // SU(2n) / Sp(n)
  GroupType,                 // (G x G) / diagonal
};

/// One of the classical compact symmetric-space families, with its size
/// parameters. GroupType carries the factor group of G x G / diag instead.
struct SpaceSpec {
  SpaceFamily family;
  int m = 0;
  int n = 0;
  GroupSpec factor{GroupFamily::U, 1};  // GroupType only

  bool operator==(const SpaceSpec&) const = default;
};

SpaceSpec complex_grassmannian(int m, int n);
SpaceSpec real_grassmannian(int m, int n);
SpaceSpec quaternionic_grassmannian(int m, int n);
SpaceSpec su_so_space(int n);
SpaceSpec so2n_u_space(int n);
SpaceSpec sp_u_space(int n);
SpaceSpec su2n_sp_space(int n);
SpaceSpec group_type_space(const GroupSpec& g);

std::string space_name(const SpaceSpec& s);

/// Ambient group of the realization; GroupType has no single GroupSpec
/// ambient (it is G x G, represented on block-diagonal matrices).
GroupSpec ambient_group(const SpaceSpec& s);
bool has_group_ambient(const SpaceSpec& s);

int ambient_matrix_dim(const SpaceSpec& s);
std::vector<CMat> ambient_algebra_basis(const SpaceSpec& s);
double ambient_membership_residual(const SpaceSpec& s, const CMat& p);
double ambient_algebra_residual(const SpaceSpec& s, const CMat& x);
CMat sample_ambient_point(const SpaceSpec& s, std::uint64_t seed);
CMat sample_ambient_algebra(const SpaceSpec& s, std::uint64_t seed);

namespace detail {
template <class S>
Mat<S> apply_involution(const SpaceSpec& s, const Mat<S>& p);
}

/// The involutive automorphism sigma of the ambient group. Built from sign
/// flips, permutations and entrywise conjugation only, so sigma(sigma(p))
/// reproduces p bit for bit.
CMat involution(const SpaceSpec& s, const CMat& p);

/// Linearization of sigma on the ambient Lie algebra (same constant maps).
template <class S>
Mat<S> dsigma(const SpaceSpec& s, const Mat<S>& x) {
  return detail::apply_involution(s, x);
}

/// Cartan map p -> p * sigma(p)^{-1}, defined on plain and jet matrices.
template <class S>
Mat<S> cartan_map_matrix(const SpaceSpec& s, const Mat<S>& p) {
  return p * inverse(detail::apply_involution(s, p));
}

/// Validating front end for group elements.
CMat cartan_map(const SpaceSpec& s, const CMat& p);

struct PBasis {
  SpaceSpec space;
  std::vector<CMat> elements;
};

/// Orthonormal basis of the -1 eigenspace of dsigma, computed generically
/// by projecting the ambient basis and re-orthonormalizing; ordered
/// lexicographically over the ambient basis. Degenerate families (for
/// example SU(2n)/Sp(n) at n = 1) yield an empty basis.
PBasis p_basis(const SpaceSpec& s);

/// Orthonormal basis of the +1 eigenspace (the fixed subalgebra).
std::vector<CMat> k_basis(const SpaceSpec& s);

/// Closed-form dim(G/K) for the family.
int p_dim(const SpaceSpec& s);

struct CartanResiduals {
  double inversion;  // max norm over sigma(Phi(p)) = Phi(sigma(p)) = Phi(p)^{-1}
  double braid;      // Phi(p) Phi(q) Phi(p) = Phi(Phi(p) q)
};

CartanResiduals cartan_identity_residuals(const SpaceSpec& s, const CMat& p, const CMat& q);

/// First-order jet coefficient of t -> Phi(p exp(tX)); equals
/// p X sigma(p^{-1}) - p dsigma(X) sigma(p^{-1}), zero on the fixed algebra.
CMat differential_of_cartan(const SpaceSpec& s, const CMat& p, const CMat& x);

/// All families at small registry parameters, used by verification drivers.
std::vector<SpaceSpec> registry_defaults();

namespace detail {

CMat involution_conjugator(const SpaceSpec& s);  // empty when sigma conjugates entries

template <class S>
Mat<S> apply_involution(const SpaceSpec& s, const Mat<S>& p) {
  switch (s.family) {
    case SpaceFamily::ComplexGrassmannian:
    case SpaceFamily::RealGrassmannian:
    case SpaceFamily::QuaternionicGrassmannian:
    case SpaceFamily::GroupType: {
      const Mat<S> k = promote_to<S>(involution_conjugator(s));
      return k * p * k;
    }
    case SpaceFamily::SU_SO:
    case SpaceFamily::Sp_U:
      return conj_entries(p);
    case SpaceFamily::SO2n_U: {
      const CMat j = symplectic_j(s.n);
      return promote_to<S>(j) * p * promote_to<S>(transpose(j));
    }
    case SpaceFamily::SU2n_Sp: {
      const CMat j = symplectic_j(s.n);
      return promote_to<S>(j) * conj_entries(p) * promote_to<S>(transpose(j));
    }
  }
  throw std::invalid_argument("unknown space family");
}

}  // namespace detail

}  // namespace cartan
