#include "cartan/groups.hpp"

#include <cmath>
#include <stdexcept>

#include "cartan/rng.hpp"

namespace cartan {

namespace {

constexpr Complex kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

CMat embed_diag(const CMat& a, const CMat& b) {
  const int n = a.rows();
  CMat m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(i + n, j + n) = b(i, j);
    }
  return m;
}

CMat embed_offdiag(const CMat& a, const CMat& b) {
  // [[0, a], [b, 0]]
  const int n = a.rows();
  CMat m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(i, j + n) = a(i, j);
      m(i + n, j) = b(i, j);
    }
  return m;
}

std::vector<CMat> u_basis(int n) {
  std::vector<CMat> b;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) b.push_back(elem_Y(n, r, s));
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) b.push_back(kI * elem_X(n, r, s));
  for (int t = 0; t < n; ++t) b.push_back(kI * elem_D(n, t));
  return b;
}

// su(n): the u(n) basis with the central direction i I/sqrt(n) projected
// out of the iD block, re-orthonormalized by modified Gram-Schmidt. The
// last diagonal generator becomes dependent and is dropped.
std::vector<CMat> su_basis(int n) {
  std::vector<CMat> b;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) b.push_back(elem_Y(n, r, s));
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) b.push_back(kI * elem_X(n, r, s));
  CMat center = (kI / std::sqrt(double(n))) * cidentity(n);
  std::vector<CMat> diag;
  for (int t = 0; t < n; ++t) {
    CMat v = kI * elem_D(n, t);
    v -= frobenius_inner(center, v) * center;
    for (const CMat& w : diag) v -= frobenius_inner(w, v) * w;
    const double nv = std::sqrt(frobenius_inner(v, v));
    if (nv < 1e-9) continue;
    v *= Complex(1.0 / nv);
    diag.push_back(v);
  }
  for (auto& v : diag) b.push_back(v);
  return b;
}

std::vector<CMat> sp_basis(int n) {
  std::vector<CMat> b;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      const CMat y = elem_Y(n, r, s);
      b.push_back(kInvSqrt2 * embed_diag(y, y));
    }
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      const CMat ix = kI * elem_X(n, r, s);
      b.push_back(kInvSqrt2 * embed_diag(ix, -1.0 * ix));
    }
  for (int t = 0; t < n; ++t) {
    const CMat id = kI * elem_D(n, t);
    b.push_back(kInvSqrt2 * embed_diag(id, -1.0 * id));
  }
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      const CMat x = elem_X(n, r, s);
      b.push_back(kInvSqrt2 * embed_offdiag(x, -1.0 * x));
    }
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      const CMat ix = kI * elem_X(n, r, s);
      b.push_back(kInvSqrt2 * embed_offdiag(ix, ix));
    }
  for (int t = 0; t < n; ++t) {
    const CMat d = elem_D(n, t);
    b.push_back(kInvSqrt2 * embed_offdiag(d, -1.0 * d));
  }
  for (int t = 0; t < n; ++t) {
    const CMat id = kI * elem_D(n, t);
    b.push_back(kInvSqrt2 * embed_offdiag(id, id));
  }
  return b;
}

double imag_norm(const CMat& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a(i, j).imag() * a(i, j).imag();
  return std::sqrt(s);
}

void check_dim(const GroupSpec& g, const CMat& m, const char* what) {
  const int d = matrix_dim(g);
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument(std::string(what) + " has wrong dimension for " + group_name(g));
}

}  // namespace

std::string group_name(const GroupSpec& g) {
  const std::string n = std::to_string(g.n);
  switch (g.family) {
    case GroupFamily::SO: return "SO(" + n + ")";
    case GroupFamily::U: return "U(" + n + ")";
    case GroupFamily::SU: return "SU(" + n + ")";
    case GroupFamily::Sp: return "Sp(" + n + ")";
  }
  return "?";
}

int matrix_dim(const GroupSpec& g) {
  return g.family == GroupFamily::Sp ? 2 * g.n : g.n;
}

int algebra_dim(const GroupSpec& g) {
  switch (g.family) {
    case GroupFamily::SO: return g.n * (g.n - 1) / 2;
    case GroupFamily::U: return g.n * g.n;
    case GroupFamily::SU: return g.n * g.n - 1;
    case GroupFamily::Sp: return g.n * (2 * g.n + 1);
  }
  return 0;
}

CMat elem_E(int n, int j, int a) {
  CMat m(n, n);
  m(j, a) = 1.0;
  return m;
}

CMat elem_Y(int n, int r, int s) {
  CMat m(n, n);
  m(r, s) = kInvSqrt2;
  m(s, r) = -kInvSqrt2;
  return m;
}

CMat elem_X(int n, int r, int s) {
  CMat m(n, n);
  m(r, s) = kInvSqrt2;
  m(s, r) = kInvSqrt2;
  return m;
}

CMat elem_D(int n, int t) {
  CMat m(n, n);
  m(t, t) = 1.0;
  return m;
}

CMat signature_matrix(int m, int n) {
  CMat s(m + n, m + n);
  for (int i = 0; i < m; ++i) s(i, i) = 1.0;
  for (int i = m; i < m + n; ++i) s(i, i) = -1.0;
  return s;
}

CMat symplectic_j(int n) {
  CMat j(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(i, i + n) = 1.0;
    j(i + n, i) = -1.0;
  }
  return j;
}

AlgebraBasis algebra_basis(const GroupSpec& g) {
  switch (g.family) {
    case GroupFamily::SO:
      if (g.n < 2) throw std::invalid_argument("so(n) basis needs n >= 2");
      {
        std::vector<CMat> b;
        for (int r = 0; r < g.n; ++r)
          for (int s = r + 1; s < g.n; ++s) b.push_back(elem_Y(g.n, r, s));
        return {g, std::move(b)};
      }
    case GroupFamily::U:
      if (g.n < 1) throw std::invalid_argument("u(n) basis needs n >= 1");
      return {g, u_basis(g.n)};
    case GroupFamily::SU:
      if (g.n < 2) throw std::invalid_argument("su(n) basis needs n >= 2");
      return {g, su_basis(g.n)};
    case GroupFamily::Sp:
      if (g.n < 1) throw std::invalid_argument("sp(n) basis needs n >= 1");
      return {g, sp_basis(g.n)};
  }
  throw std::invalid_argument("unknown group family");
}

double algebra_residual(const GroupSpec& g, const CMat& x) {
  check_dim(g, x, "algebra element");
  switch (g.family) {
    case GroupFamily::SO:
      return std::max(frobenius_norm(transpose(x) + x), imag_norm(x));
    case GroupFamily::U:
      return frobenius_norm(conj_transpose(x) + x);
    case GroupFamily::SU:
      return std::max(frobenius_norm(conj_transpose(x) + x), std::abs(trace(x)));
    case GroupFamily::Sp: {
      const CMat j = symplectic_j(g.n);
      const double skew = frobenius_norm(conj_transpose(x) + x);
      const double quat = frobenius_norm(j * x - conj_entries(x) * j);
      return std::max(skew, quat);
    }
  }
  return 0.0;
}

double membership_residual(const GroupSpec& g, const CMat& m) {
  check_dim(g, m, "group element");
  const int d = matrix_dim(g);
  switch (g.family) {
    case GroupFamily::SO: {
      const double orth = frobenius_norm(transpose(m) * m - cidentity(d));
      const double dres = std::abs(det(m) - 1.0);
      return std::max({orth, dres, imag_norm(m)});
    }
    case GroupFamily::U:
      return frobenius_norm(conj_transpose(m) * m - cidentity(d));
    case GroupFamily::SU: {
      const double uni = frobenius_norm(conj_transpose(m) * m - cidentity(d));
      return std::max(uni, std::abs(det(m) - 1.0));
    }
    case GroupFamily::Sp: {
      const double uni = frobenius_norm(conj_transpose(m) * m - cidentity(d));
      const CMat j = symplectic_j(g.n);
      const double quat = frobenius_norm(j * m - conj_entries(m) * j);
      return std::max(uni, quat);
    }
  }
  return 0.0;
}

double killing_form(const GroupSpec& g, const CMat& x, const CMat& y) {
  if (algebra_residual(g, x) > 1e-8 || algebra_residual(g, y) > 1e-8)
    throw std::domain_error("killing_form: input violates " + group_name(g) + " algebra constraints");
  const Complex txy = trace(x * y);
  const double n = g.n;
  switch (g.family) {
    case GroupFamily::SO:
      return ((n - 2.0) * txy).real();
    case GroupFamily::U:
      return (2.0 * n * txy - 2.0 * trace(x) * trace(y)).real();
    case GroupFamily::SU:
      return (2.0 * n * txy).real();
    case GroupFamily::Sp:
      // trace(ad o ad) on the 2n x 2n complex representation measures
      // coefficient 2n+2, not the 2n quoted alongside the su formula.
      return ((2.0 * n + 2.0) * txy).real();
  }
  return 0.0;
}

double killing_form_bruteforce(const GroupSpec& g, const CMat& x, const CMat& y) {
  if (algebra_residual(g, x) > 1e-8 || algebra_residual(g, y) > 1e-8)
    throw std::domain_error("killing_form: input violates " + group_name(g) + " algebra constraints");
  const AlgebraBasis basis = algebra_basis(g);
  const int d = int(basis.elements.size());
  // [ad_X]_{ij} = <E_i, [X, E_j]> over the orthonormal basis.
  std::vector<double> adx(size_t(d) * d), ady(size_t(d) * d);
  for (int j = 0; j < d; ++j) {
    const CMat bx = commutator(x, basis.elements[j]);
    const CMat by = commutator(y, basis.elements[j]);
    for (int i = 0; i < d; ++i) {
      adx[size_t(i) * d + j] = frobenius_inner(basis.elements[i], bx);
      ady[size_t(i) * d + j] = frobenius_inner(basis.elements[i], by);
    }
  }
  double t = 0.0;
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) t += adx[size_t(i) * d + k] * ady[size_t(k) * d + i];
  return t;
}

CMat sample_algebra_element(const GroupSpec& g, Rng& rng) {
  const AlgebraBasis basis = algebra_basis(g);
  CMat x(matrix_dim(g), matrix_dim(g));
  for (const CMat& e : basis.elements) x += rng.gaussian() * e;
  return x;
}

CMat sample_algebra_element(const GroupSpec& g, std::uint64_t seed) {
  Rng rng(seed);
  return sample_algebra_element(g, rng);
}

CMat sample_group_element(const GroupSpec& g, std::uint64_t seed) {
  return mat_exp(sample_algebra_element(g, seed));
}

SquareSums square_sum_identities(int n) {
  if (n < 2) throw std::invalid_argument("square sums need n >= 2");
  CMat sy(n, n), sx(n, n), sd(n, n);
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      const CMat y = elem_Y(n, r, s);
      const CMat x = elem_X(n, r, s);
      sy += y * y;
      sx += x * x;
    }
  for (int t = 0; t < n; ++t) {
    const CMat dm = elem_D(n, t);
    sd += dm * dm;
  }
  return {sy, sx, sd};
}

}  // namespace cartan
