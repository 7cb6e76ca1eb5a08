#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "cartan/jet.hpp"

namespace cartan {

/// Dense rectangular matrix, generic over the scalar ring (plain complex
/// or order-2 jets). Row-major storage, value semantics.
template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }
  Mat(int rows, int cols, std::initializer_list<S> entries) : Mat(rows, cols) {
    if (entries.size() != e_.size()) throw std::invalid_argument("entry count mismatch");
    std::copy(entries.begin(), entries.end(), e_.begin());
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  Mat& operator+=(const Mat& o) {
    check_same_shape(o);
    for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same_shape(o);
    for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
  }
  Mat& operator*=(const S& c) {
    for (auto& x : e_) x = x * c;
    return *this;
  }

  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<S> e_;
};

using CMat = Mat<Complex>;
using JMat = Mat<Jet>;

template <class S>
Mat<S> operator+(Mat<S> a, const Mat<S>& b) { return a += b; }
template <class S>
Mat<S> operator-(Mat<S> a, const Mat<S>& b) { return a -= b; }

template <class S>
Mat<S> operator*(const Mat<S>& a, const Mat<S>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Mat<S> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class S, class C>
Mat<S> operator*(const C& c, Mat<S> a) { return a *= S(c); }

template <class S>
Mat<S> operator-(const Mat<S>& a) {
  Mat<S> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

template <class S>
Mat<S> identity_like(int n, const Mat<S>*) {
  Mat<S> m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = S(1.0);
  return m;
}

inline CMat cidentity(int n) { return identity_like<Complex>(n, nullptr); }
inline JMat jidentity(int n) { return identity_like<Jet>(n, nullptr); }

template <class S>
Mat<S> transpose(const Mat<S>& a) {
  Mat<S> c(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(j, i) = a(i, j);
  return c;
}

template <class S>
Mat<S> conj_entries(const Mat<S>& a) {
  using std::conj;
  Mat<S> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = conj(a(i, j));
  return c;
}

template <class S>
Mat<S> conj_transpose(const Mat<S>& a) { return transpose(conj_entries(a)); }

template <class S>
S trace(const Mat<S>& a) {
  if (!a.square()) throw std::invalid_argument("trace of non-square matrix");
  S t{};
  for (int i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

inline double frobenius_norm(const CMat& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

inline double max_abs(const CMat& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s = std::max(s, std::abs(a(i, j)));
  return s;
}

/// Real inner product Re trace(conj(X)^t Y) on matrix space; restricts to
/// the standard bi-invariant metric on the compact classical groups.
inline double frobenius_inner(const CMat& x, const CMat& y) {
  x.check_same_shape(y);
  Complex t{};
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) t += std::conj(x(i, j)) * y(i, j);
  return t.real();
}

inline CMat commutator(const CMat& x, const CMat& y) { return x * y - y * x; }

inline JMat promote(const CMat& a) {
  JMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = Jet(a(i, j));
  return c;
}

inline CMat value_part(const JMat& a) {
  CMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j).v0;
  return c;
}

inline CMat jet_coefficient(const JMat& a, int order) {
  CMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      c(i, j) = order == 0 ? a(i, j).v0 : (order == 1 ? a(i, j).v1 : a(i, j).v2);
  return c;
}

/// Order-2 jet of the integral curve t -> p * exp(t X) of the left-invariant
/// field X through p: value p, first coefficient pX, second pX^2/2.
inline JMat jet_curve(const CMat& p, const CMat& x) {
  if (!p.square() || !x.square()) throw std::invalid_argument("jet_curve needs square matrices");
  p.check_same_shape(x);
  const CMat px = p * x;
  const CMat pxx = 0.5 * (px * x);
  JMat c(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j) c(i, j) = Jet(p(i, j), px(i, j), pxx(i, j));
  return c;
}

namespace detail {

// LU with partial pivoting, in place; returns pivot sign or 0 on singularity.
inline int lu_decompose(CMat& a, std::vector<int>& piv) {
  const int n = a.rows();
  piv.resize(n);
  int sign = 1;
  for (int i = 0; i < n; ++i) piv[i] = i;
  for (int k = 0; k < n; ++k) {
    int imax = k;
    double amax = std::abs(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > amax) {
        amax = v;
        imax = i;
      }
    }
    if (amax == 0.0) return 0;
    if (imax != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(imax, j));
      std::swap(piv[k], piv[imax]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      for (int j = k + 1; j < n; ++j) a(i, j) -= a(i, k) * a(k, j);
    }
  }
  return sign;
}

}  // namespace detail

inline Complex det(const CMat& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  CMat lu = a;
  std::vector<int> piv;
  const int sign = detail::lu_decompose(lu, piv);
  if (sign == 0) return 0.0;
  Complex d = double(sign);
  for (int i = 0; i < a.rows(); ++i) d *= lu(i, i);
  return d;
}

inline CMat inverse(const CMat& a) {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = a.rows();
  CMat lu = a;
  std::vector<int> piv;
  if (detail::lu_decompose(lu, piv) == 0) throw std::domain_error("singular matrix");
  CMat inv(n, n);
  for (int col = 0; col < n; ++col) {
    std::vector<Complex> b(n);
    b[col] = 1.0;
    std::vector<Complex> y(n);
    for (int i = 0; i < n; ++i) {
      Complex s = b[piv[i]];
      for (int j = 0; j < i; ++j) s -= lu(i, j) * y[j];
      y[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
      Complex s = y[i];
      for (int j = i + 1; j < n; ++j) s -= lu(i, j) * inv(j, col);
      inv(i, col) = s / lu(i, i);
    }
  }
  return inv;
}

/// Inverse of a jet matrix with invertible value part:
///   (A0 + tA1 + t^2 A2)^-1 = B0 - t B0 A1 B0 + t^2 (B0 A1 B0 A1 B0 - B0 A2 B0).
inline JMat inverse(const JMat& a) {
  const CMat a0 = jet_coefficient(a, 0);
  const CMat a1 = jet_coefficient(a, 1);
  const CMat a2 = jet_coefficient(a, 2);
  const CMat b0 = inverse(a0);
  const CMat b0a1b0 = b0 * a1 * b0;
  const CMat c1 = -1.0 * b0a1b0;
  const CMat c2 = b0a1b0 * a1 * b0 - b0 * a2 * b0;
  JMat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = Jet(b0(i, j), c1(i, j), c2(i, j));
  return c;
}

inline bool all_finite(const CMat& a);

/// Matrix exponential by scaling and squaring with a fixed order-12 Taylor
/// polynomial; the inputs in this toolkit are small skew-Hermitian matrices.
inline CMat mat_exp(const CMat& a) {
  if (!a.square()) throw std::invalid_argument("mat_exp of non-square matrix");
  if (!all_finite(a)) throw std::invalid_argument("mat_exp of non-finite matrix");
  const int n = a.rows();
  int scale = 0;
  double norm = frobenius_norm(a);
  while (norm > 0.5 && scale < 64) {
    norm *= 0.5;
    ++scale;
  }
  CMat b = std::pow(0.5, scale) * a;
  CMat term = cidentity(n);
  CMat sum = term;
  for (int k = 1; k <= 12; ++k) {
    term = (1.0 / k) * (term * b);
    sum += term;
  }
  for (int s = 0; s < scale; ++s) sum = sum * sum;
  return sum;
}

inline bool all_finite(const CMat& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
  return true;
}

template <class S>
Mat<S> promote_to(const CMat& a);
template <>
inline Mat<Complex> promote_to<Complex>(const CMat& a) { return a; }
template <>
inline Mat<Jet> promote_to<Jet>(const CMat& a) { return promote(a); }

template <class S>
Mat<S> block_diag(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(i + a.rows(), j + a.cols()) = b(i, j);
  return m;
}

template <class S>
Mat<S> block(const Mat<S>& m, int row0, int col0, int rows, int cols) {
  Mat<S> a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = m(row0 + i, col0 + j);
  return a;
}

}  // namespace cartan
