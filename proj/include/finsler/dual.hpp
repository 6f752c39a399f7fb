#pragma once

#include <cmath>
#include <utility>

namespace finsler {

/// First-order dual number over an arbitrary scalar ring T.
///
/// Nesting (Dual<Dual<...>>) yields exact mixed partial derivatives of any
/// order: each nesting level carries one independent infinitesimal, and the
/// coefficient of a product of infinitesimals is the corresponding mixed
/// partial.  All metric evaluations in this library run through these towers,
/// so curvature formulas see derivatives that are exact to rounding.
template <class T>
struct Dual {
  T re{};  // value part
  T du{};  // derivative part

  Dual() = default;
  Dual(double v) : re(v), du() {}  // NOLINT: constants lift implicitly
  Dual(T r, T d) : re(std::move(r)), du(std::move(d)) {}
};

inline double value(double x) { return x; }

/// Underlying double value of an arbitrarily deep tower.
template <class T>
double value(const Dual<T>& x) {
  return value(x.re);
}

template <class T>
Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) {
  return {a.re + b.re, a.du + b.du};
}
template <class T>
Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) {
  return {a.re - b.re, a.du - b.du};
}
template <class T>
Dual<T> operator-(const Dual<T>& a) {
  return {-a.re, -a.du};
}
template <class T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.re * b.re, a.re * b.du + a.du * b.re};
}
template <class T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  T inv_b = 1.0 / b.re;
  return {a.re * inv_b, (a.du * b.re - a.re * b.du) * (inv_b * inv_b)};
}

// Double-scalar forms avoid building full towers for literal coefficients.
template <class T>
Dual<T> operator+(const Dual<T>& a, double b) {
  return {a.re + b, a.du};
}
template <class T>
Dual<T> operator+(double a, const Dual<T>& b) {
  return {a + b.re, b.du};
}
template <class T>
Dual<T> operator-(const Dual<T>& a, double b) {
  return {a.re - b, a.du};
}
template <class T>
Dual<T> operator-(double a, const Dual<T>& b) {
  return {a - b.re, -b.du};
}
template <class T>
Dual<T> operator*(const Dual<T>& a, double b) {
  return {a.re * b, a.du * b};
}
template <class T>
Dual<T> operator*(double a, const Dual<T>& b) {
  return {a * b.re, a * b.du};
}
template <class T>
Dual<T> operator/(const Dual<T>& a, double b) {
  return {a.re / b, a.du / b};
}
template <class T>
Dual<T> operator/(double a, const Dual<T>& b) {
  return Dual<T>(a) / b;
}

template <class T>
Dual<T> sqrt(const Dual<T>& x) {
  using std::sqrt;
  T r = sqrt(x.re);
  return {r, x.du / (2.0 * r)};
}

// Common nesting depths.  Depth five is the deepest the curvature layer
// needs (outer jets of the spray on top of its internal towers).
using D1 = Dual<double>;
using D2 = Dual<D1>;
using D3 = Dual<D2>;
using D4 = Dual<D3>;
using D5 = Dual<D4>;

namespace detail {

template <int M>
struct TowerOf {
  using type = Dual<typename TowerOf<M - 1>::type>;
};
template <>
struct TowerOf<0> {
  using type = double;
};

}  // namespace detail

/// Scalar tower of nesting depth M (Tower<0> = double).
template <int M>
using Tower = typename detail::TowerOf<M>::type;

}  // namespace finsler
