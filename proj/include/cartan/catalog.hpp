#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartan/fields.hpp"
#include "cartan/spaces.hpp"

namespace cartan {

/// A scalar field on the ambient group together with its claimed tension
/// and conformality eigenvalues. The eigenvalues are catalog data, never
/// recomputed from the field under test.
struct EigenCandidate {
  ScalarField field;
  Complex lambda;
  Complex mu;
  SpaceSpec space;
  std::string family_tag;
  bool k_invariant = true;
};

/// Nonzero complex vector with vanishing bilinear square sum.
struct IsotropicVector {
  std::vector<Complex> entries;
};

Complex bilinear_dot(const std::vector<Complex>& a, const std::vector<Complex>& b);
double isotropy_residual(const IsotropicVector& v);

/// Seeded unit vector with sum of squares exactly zero by construction
/// (u + iw with matched norms and u orthogonal to w).
IsotropicVector isotropic_vector(int dim, std::uint64_t seed);

/// Two independent vectors spanning an isotropic 2-plane (dim >= 4).
std::pair<IsotropicVector, IsotropicVector> isotropic_plane(int dim, std::uint64_t seed);

// The catalog. Indices alpha are 1-based as in the classical numbering.

/// psi_{j alpha}(z) = sum_{r<=m} z_{jr} conj(z_{alpha r}) on U(m+n), j != alpha;
/// lambda = -2(m+n), mu = -2.
std::vector<EigenCandidate> complex_grassmannian_family(int m, int n, int alpha);

/// psi_v(x) = sum_{j,a} v_j v_a sum_{r<=m} x_{jr} x_{ar} on SO(m+n);
/// lambda = -(m+n), mu = -2. v must be isotropic.
EigenCandidate real_grassmannian_eigenfunction(int m, int n, const IsotropicVector& v);

/// On the complex representation of Sp(m+n), j != alpha in 1..2(m+n);
/// lambda = -2(m+n), mu = -1.
std::vector<EigenCandidate> quaternionic_grassmannian_family(int m, int n, int alpha);

/// phi(z) = trace(a^t a z z^t) on SU(n);
/// lambda = -2(n^2+n-2)/n, mu = -4(n-1)/n.
EigenCandidate su_so_eigenfunction(int n, const std::vector<Complex>& a);

/// psi(x) = -sum A_{j a}(x J x^t)_{j a}, A built from an isotropic pair;
/// lambda = -2(n-1), mu = -1 on SO(2n).
EigenCandidate so2n_un_eigenfunction(int n, const std::vector<Complex>& a,
                                     const std::vector<Complex>& b);

/// phi(q) = trace(a^t a q q^t) on the complex representation of Sp(n);
/// lambda = -2(n+1), mu = -2.
EigenCandidate spn_un_eigenfunction(int n, const std::vector<Complex>& a);

/// psi(z) = -sum A_{j a}(z J z^t)_{j a} on SU(2n), a, b independent;
/// lambda = -2(2n^2-n-1)/n, mu = -2(n-1)/n. Degenerate at n = 1.
EigenCandidate su2n_spn_eigenfunction(int n, const std::vector<Complex>& a,
                                      const std::vector<Complex>& b);

}  // namespace cartan
