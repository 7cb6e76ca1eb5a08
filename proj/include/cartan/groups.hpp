#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartan/matrix.hpp"

namespace cartan {

enum class GroupFamily { SO, U, SU, Sp };

/// One of the compact classical groups SO(n), U(n), SU(n) or Sp(n).
/// Sp(n) is handled exclusively through its 2n x 2n complex representation.
struct GroupSpec {
  GroupFamily family;
  int n;

  bool operator==(const GroupSpec&) const = default;
};

inline GroupSpec so_group(int n) { return {GroupFamily::SO, n}; }
inline GroupSpec u_group(int n) { return {GroupFamily::U, n}; }
inline GroupSpec su_group(int n) { return {GroupFamily::SU, n}; }
inline GroupSpec sp_group(int n) { return {GroupFamily::Sp, n}; }

std::string group_name(const GroupSpec& g);

/// Side length of the matrices representing elements (2n for Sp).
int matrix_dim(const GroupSpec& g);

/// Dimension of the Lie algebra: n(n-1)/2, n^2, n^2-1, n(2n+1).
int algebra_dim(const GroupSpec& g);

// Elementary generators, as n x n complex matrices:
//   Y_rs = (E_rs - E_sr)/sqrt(2),  X_rs = (E_rs + E_sr)/sqrt(2),  D_t = E_tt.
CMat elem_E(int n, int j, int a);
CMat elem_Y(int n, int r, int s);
CMat elem_X(int n, int r, int s);
CMat elem_D(int n, int t);

/// The block matrices I_{m,n} = diag(I_m, -I_n) and J_n = [[0, I],[-I, 0]].
CMat signature_matrix(int m, int n);
CMat symplectic_j(int n);

struct AlgebraBasis {
  GroupSpec group;
  std::vector<CMat> elements;
};

/// Orthonormal basis of the Lie algebra under frobenius_inner, in a fixed
/// deterministic order (Y block, iX block, iD block, then the off-diagonal
/// sp blocks, lexicographic in (r,s) / t).
AlgebraBasis algebra_basis(const GroupSpec& g);

/// Residual of the algebra's defining linear constraints at X (0 = member).
double algebra_residual(const GroupSpec& g, const CMat& x);

/// Residual of the group's defining equations at M (0 = member).
double membership_residual(const GroupSpec& g, const CMat& m);

/// Closed-form Killing form. Inputs must satisfy the algebra constraints
/// to 1e-8. The sp(n) coefficient is the one the brute-force oracle
/// measures, 2n+2 on the 2n x 2n complex representation.
double killing_form(const GroupSpec& g, const CMat& x, const CMat& y);

/// Independent oracle: assembles the matrices of ad_X and ad_Y over the
/// orthonormal basis and returns trace(ad_X ad_Y).
double killing_form_bruteforce(const GroupSpec& g, const CMat& x, const CMat& y);

/// exp of a seeded Gaussian combination of the orthonormal basis; lands in
/// the group to well below 1e-10 and is deterministic per seed.
CMat sample_group_element(const GroupSpec& g, std::uint64_t seed);

/// Gaussian combination of the orthonormal basis elements.
CMat sample_algebra_element(const GroupSpec& g, std::uint64_t seed);
CMat sample_algebra_element(const GroupSpec& g, class Rng& rng);

struct SquareSums {
  CMat sum_y_squared;   // = -(n-1)/2 I
  CMat sum_x_squared;   // =  (n-1)/2 I
  CMat sum_d_squared;   // =  I
};

SquareSums square_sum_identities(int n);

}  // namespace cartan
