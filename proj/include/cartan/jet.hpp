#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace cartan {

using Complex = std::complex<double>;

/// Order-2 jet over the complex numbers: the truncation
///   v0 + v1*t + v2*t^2  (mod t^3)
/// of a smooth curve value along a real parameter t. Products follow the
/// truncated polynomial ring; first and second derivatives at t = 0 are
/// v1 and 2*v2.
struct Jet {
  Complex v0{};
  Complex v1{};
  Complex v2{};

  Jet() = default;
  Jet(Complex a) : v0(a) {}
  Jet(Complex a, Complex b, Complex c) : v0(a), v1(b), v2(c) {}

  Jet& operator+=(const Jet& o) {
    v0 += o.v0;
    v1 += o.v1;
    v2 += o.v2;
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    v0 -= o.v0;
    v1 -= o.v1;
    v2 -= o.v2;
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    const Complex a0 = v0, a1 = v1, a2 = v2;
    v0 = a0 * o.v0;
    v1 = a0 * o.v1 + a1 * o.v0;
    v2 = a0 * o.v2 + a1 * o.v1 + a2 * o.v0;
    return *this;
  }
};

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator*(Jet a, const Jet& b) { return a *= b; }
inline Jet operator-(const Jet& a) { return {-a.v0, -a.v1, -a.v2}; }

inline Jet operator*(const Complex& c, const Jet& a) { return {c * a.v0, c * a.v1, c * a.v2}; }
inline Jet operator*(const Jet& a, const Complex& c) { return c * a; }
inline Jet operator*(double c, const Jet& a) { return Complex(c) * a; }
inline Jet operator*(const Jet& a, double c) { return Complex(c) * a; }
inline Jet operator+(const Jet& a, const Complex& c) { return {a.v0 + c, a.v1, a.v2}; }
inline Jet operator+(const Complex& c, const Jet& a) { return a + c; }
inline Jet operator-(const Jet& a, const Complex& c) { return {a.v0 - c, a.v1, a.v2}; }
inline Jet operator-(const Complex& c, const Jet& a) { return {c - a.v0, -a.v1, -a.v2}; }

/// Division is defined only when the divisor has nonzero value part.
inline Jet operator/(const Jet& a, const Jet& b) {
  if (b.v0 == Complex(0.0)) throw std::domain_error("jet division by zero value part");
  const Complex c0 = a.v0 / b.v0;
  const Complex c1 = (a.v1 - c0 * b.v1) / b.v0;
  const Complex c2 = (a.v2 - c0 * b.v2 - c1 * b.v1) / b.v0;
  return {c0, c1, c2};
}
inline Jet operator/(const Jet& a, const Complex& c) { return a / Jet(c); }
inline Jet operator/(const Complex& c, const Jet& a) { return Jet(c) / a; }

// The curve parameter is real, so conjugation acts componentwise.
inline Jet conj(const Jet& a) { return {std::conj(a.v0), std::conj(a.v1), std::conj(a.v2)}; }

inline Jet exp(const Jet& a) {
  const Complex e = std::exp(a.v0);
  return {e, e * a.v1, e * (a.v2 + 0.5 * a.v1 * a.v1)};
}

/// Principal-branch logarithm; requires the value part off the origin.
inline Jet log(const Jet& a) {
  if (a.v0 == Complex(0.0)) throw std::domain_error("jet log at zero value part");
  const Complex w1 = a.v1 / a.v0;
  return {std::log(a.v0), w1, a.v2 / a.v0 - 0.5 * w1 * w1};
}

inline Jet pow(const Jet& a, const Complex& s) { return exp(s * log(a)); }

inline double abs(const Jet& a) { return std::abs(a.v0); }

// Embeds plain complex scalars so field evaluators can be written once,
// generically over the scalar type.
inline Complex value_part(const Complex& z) { return z; }
inline Complex value_part(const Jet& a) { return a.v0; }

}  // namespace cartan
