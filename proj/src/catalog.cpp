#include "cartan/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "cartan/rng.hpp"

namespace cartan {

namespace {

const double kSqrt2 = std::sqrt(2.0);

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Row vector (a * M), generic over the scalar ring.
template <class S>
std::vector<S> row_times_matrix(const std::vector<Complex>& a, const Mat<S>& m) {
  std::vector<S> w(m.cols(), S{});
  for (int j = 0; j < m.rows(); ++j) {
    if (a[j] == Complex(0.0)) continue;
    for (int k = 0; k < m.cols(); ++k) w[k] += a[j] * m(j, k);
  }
  return w;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool nonzero(const std::vector<Complex>& a) {
  for (const Complex& x : a)
    if (x != Complex(0.0)) return true;
  return false;
}

// Rank of the 2 x 2 Hermitian Gram matrix of (a, b); 2 means independent.
bool independent(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex aa = 0.0, ab = 0.0, bb = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    aa += std::conj(a[k]) * a[k];
    ab += std::conj(a[k]) * b[k];
    bb += std::conj(b[k]) * b[k];
  }
  const double gram_det = (aa * bb - std::conj(ab) * ab).real();
  return gram_det > 1e-12 * std::max(1.0, std::abs(aa * bb));
}

}  // namespace

Complex bilinear_dot(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bilinear_dot: length mismatch");
  Complex s = 0.0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double isotropy_residual(const IsotropicVector& v) {
  return std::abs(bilinear_dot(v.entries, v.entries));
}

IsotropicVector isotropic_vector(int dim, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("isotropic_vector needs dim >= 2");
  Rng rng(seed);
  std::vector<double> u(dim), w(dim);
  for (int k = 0; k < dim; ++k) u[k] = rng.gaussian();
  for (int k = 0; k < dim; ++k) w[k] = rng.gaussian();
  // w orthogonal to u with matched norm, so (u + iw)/sqrt(2)|u| is isotropic.
  double uw = 0.0, uu = 0.0;
  for (int k = 0; k < dim; ++k) {
    uw += u[k] * w[k];
    uu += u[k] * u[k];
  }
  for (int k = 0; k < dim; ++k) w[k] -= (uw / uu) * u[k];
  const double nu = norm2(u), nw = norm2(w);
  IsotropicVector v;
  v.entries.resize(dim);
  const double scale = 1.0 / (kSqrt2 * nu);
  for (int k = 0; k < dim; ++k) v.entries[k] = Complex(u[k], w[k] * nu / nw) * scale;
  return v;
}

std::pair<IsotropicVector, IsotropicVector> isotropic_plane(int dim, std::uint64_t seed) {
  if (dim < 4) throw std::invalid_argument("isotropic_plane needs dim >= 4");
  Rng rng(seed);
  // Four orthonormal real directions; pair them into two isotropic vectors.
  std::vector<std::vector<double>> e;
  while (e.size() < 4) {
    std::vector<double> v(dim);
    for (int k = 0; k < dim; ++k) v[k] = rng.gaussian();
    for (const auto& u : e) {
      double d = 0.0;
      for (int k = 0; k < dim; ++k) d += u[k] * v[k];
      for (int k = 0; k < dim; ++k) v[k] -= d * u[k];
    }
    const double nv = norm2(v);
    if (nv < 1e-8) continue;
    for (int k = 0; k < dim; ++k) v[k] /= nv;
    e.push_back(v);
  }
  IsotropicVector a, b;
  a.entries.resize(dim);
  b.entries.resize(dim);
  for (int k = 0; k < dim; ++k) {
    a.entries[k] = Complex(e[0][k], e[1][k]) / kSqrt2;
    b.entries[k] = Complex(e[2][k], e[3][k]) / kSqrt2;
  }
  return {a, b};
}

std::vector<EigenCandidate> complex_grassmannian_family(int m, int n, int alpha) {
  const SpaceSpec s = complex_grassmannian(m, n);
  require(alpha >= 1 && alpha <= m + n, "complex_grassmannian_family: alpha out of range");
  std::vector<EigenCandidate> out;
  const Complex lambda = -2.0 * (m + n);
  const Complex mu = -2.0;
  for (int j = 1; j <= m + n; ++j) {
    if (j == alpha) continue;
    const int j0 = j - 1, a0 = alpha - 1;
    auto eval = [m, j0, a0](const auto& z) {
      using std::conj;
      decltype(z(0, 0) * z(0, 0)) sum{};
      for (int r = 0; r < m; ++r) sum += z(j0, r) * conj(z(a0, r));
      return sum;
    };
    out.push_back({make_field("psi_" + std::to_string(j) + "_" + std::to_string(alpha), eval),
                   lambda, mu, s, "complex-grassmannian", true});
  }
  return out;
}

EigenCandidate real_grassmannian_eigenfunction(int m, int n, const IsotropicVector& v) {
  const SpaceSpec s = real_grassmannian(m, n);
  require(int(v.entries.size()) == m + n, "real_grassmannian_eigenfunction: vector length");
  require(nonzero(v.entries), "real_grassmannian_eigenfunction: zero vector");
  if (isotropy_residual(v) > 1e-10)
    throw std::invalid_argument("real_grassmannian_eigenfunction: vector is not isotropic");
  const std::vector<Complex> vv = v.entries;
  auto eval = [m, vv](const auto& x) {
    // sum_{j,a} v_j v_a psi_{ja} = sum_{r<=m} (v x)_r^2
    const auto w = row_times_matrix(vv, x);
    decltype(x(0, 0) * x(0, 0)) sum{};
    for (int r = 0; r < m; ++r) sum += w[r] * w[r];
    return sum;
  };
  return {make_field("psi_v", eval), Complex(-(m + n)), Complex(-2.0), s, "real-grassmannian",
          true};
}

std::vector<EigenCandidate> quaternionic_grassmannian_family(int m, int n, int alpha) {
  const SpaceSpec s = quaternionic_grassmannian(m, n);
  require(alpha >= 1 && alpha <= 2 * (m + n),
          "quaternionic_grassmannian_family: alpha out of range");
  std::vector<EigenCandidate> out;
  const Complex lambda = -2.0 * (m + n);
  const Complex mu = -1.0;
  for (int j = 1; j <= 2 * (m + n); ++j) {
    if (j == alpha) continue;
    const int j0 = j - 1, a0 = alpha - 1;
    auto eval = [m, n, j0, a0](const auto& q) {
      using std::conj;
      decltype(q(0, 0) * q(0, 0)) sum{};
      for (int r = 0; r < m; ++r) sum += q(j0, r) * conj(q(a0, r));
      for (int r = m + n; r < 2 * m + n; ++r) sum += q(j0, r) * conj(q(a0, r));
      return sum;
    };
    out.push_back({make_field("psi_" + std::to_string(j) + "_" + std::to_string(alpha), eval),
                   lambda, mu, s, "quaternionic-grassmannian", true});
  }
  return out;
}

EigenCandidate su_so_eigenfunction(int n, const std::vector<Complex>& a) {
  const SpaceSpec s = su_so_space(n);
  require(int(a.size()) == n, "su_so_eigenfunction: vector length");
  require(nonzero(a), "su_so_eigenfunction: zero vector");
  auto eval = [a](const auto& z) {
    // trace(a^t a z z^t) = sum_r (a z)_r^2
    const auto w = row_times_matrix(a, z);
    decltype(z(0, 0) * z(0, 0)) sum{};
    for (const auto& wr : w) sum += wr * wr;
    return sum;
  };
  const Complex lambda = -2.0 * (n * n + n - 2) / double(n);
  const Complex mu = -4.0 * (n - 1) / double(n);
  return {make_field("phi_a", eval), lambda, mu, s, "su-so", true};
}

namespace {

// -sqrt(2) * (a M) J (b M)^t with J the standard symplectic form; common to
// the SO(2n)/U(n) and SU(2n)/Sp(n) candidates.
template <class S>
S skew_pair_eval(const std::vector<Complex>& a, const std::vector<Complex>& b, int n,
                 const Mat<S>& m) {
  const auto u = row_times_matrix(a, m);
  const auto w = row_times_matrix(b, m);
  S sum{};
  for (int r = 0; r < n; ++r) sum += u[r] * w[r + n] - u[r + n] * w[r];
  return Complex(-kSqrt2) * sum;
}

}  // namespace

EigenCandidate so2n_un_eigenfunction(int n, const std::vector<Complex>& a,
                                     const std::vector<Complex>& b) {
  const SpaceSpec s = so2n_u_space(n);
  require(int(a.size()) == 2 * n && int(b.size()) == 2 * n, "so2n_un_eigenfunction: vector length");
  const double iso = std::max({std::abs(bilinear_dot(a, a)), std::abs(bilinear_dot(b, b)),
                               std::abs(bilinear_dot(a, b))});
  if (iso > 1e-10)
    throw std::invalid_argument("so2n_un_eigenfunction: (a,b) do not span an isotropic plane");
  if (!independent(a, b))
    throw std::invalid_argument("so2n_un_eigenfunction: a and b are linearly dependent");
  auto eval = [a, b, n](const auto& x) { return skew_pair_eval(a, b, n, x); };
  return {make_field("psi_ab", eval), Complex(-2.0 * (n - 1)), Complex(-1.0), s, "so-u", true};
}

EigenCandidate spn_un_eigenfunction(int n, const std::vector<Complex>& a) {
  const SpaceSpec s = sp_u_space(n);
  require(int(a.size()) == 2 * n, "spn_un_eigenfunction: vector length");
  require(nonzero(a), "spn_un_eigenfunction: zero vector");
  auto eval = [a](const auto& q) {
    const auto w = row_times_matrix(a, q);
    decltype(q(0, 0) * q(0, 0)) sum{};
    for (const auto& wr : w) sum += wr * wr;
    return sum;
  };
  return {make_field("phi_a", eval), Complex(-2.0 * (n + 1)), Complex(-2.0), s, "sp-u", true};
}

EigenCandidate su2n_spn_eigenfunction(int n, const std::vector<Complex>& a,
                                      const std::vector<Complex>& b) {
  if (n == 1)
    throw std::invalid_argument("su2n_spn_eigenfunction: n = 1 is degenerate (SU(2) = Sp(1))");
  const SpaceSpec s = su2n_sp_space(n);
  require(int(a.size()) == 2 * n && int(b.size()) == 2 * n,
          "su2n_spn_eigenfunction: vector length");
  if (!independent(a, b))
    throw std::invalid_argument("su2n_spn_eigenfunction: a and b are linearly dependent");
  auto eval = [a, b, n](const auto& z) { return skew_pair_eval(a, b, n, z); };
  const Complex lambda = -2.0 * (2 * n * n - n - 1) / double(n);
  const Complex mu = -2.0 * (n - 1) / double(n);
  return {make_field("psi_ab", eval), lambda, mu, s, "su-sp", true};
}

}  // namespace cartan
