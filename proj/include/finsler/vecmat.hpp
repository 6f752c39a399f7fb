#pragma once

#include <array>
#include <cmath>
#include <initializer_list>

#include "finsler/dual.hpp"
#include "finsler/errors.hpp"

namespace finsler {

inline constexpr int kMaxDim = 4;

/// Fixed-capacity vector over an arbitrary scalar (double or dual tower).
/// Sized for chart dimensions 2..4; no heap traffic in curvature loops.
template <class S>
struct Vec {
  std::array<S, kMaxDim> e{};
  int n = 0;

  Vec() = default;
  explicit Vec(int size) : n(size) {}
  Vec(std::initializer_list<double> vals) {
    n = static_cast<int>(vals.size());
    int i = 0;
    for (double v : vals) e[i++] = S(v);
  }

  static Vec zeros(int size) { return Vec(size); }
  static Vec basis(int size, int i) {
    Vec v(size);
    v.e[i] = S(1.0);
    return v;
  }

  int size() const { return n; }
  S& operator[](int i) { return e[i]; }
  const S& operator[](int i) const { return e[i]; }
};

template <class S>
Vec<S> operator+(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> r(a.n);
  for (int i = 0; i < a.n; ++i) r[i] = a[i] + b[i];
  return r;
}
template <class S>
Vec<S> operator-(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> r(a.n);
  for (int i = 0; i < a.n; ++i) r[i] = a[i] - b[i];
  return r;
}
template <class S>
Vec<S> operator-(const Vec<S>& a) {
  Vec<S> r(a.n);
  for (int i = 0; i < a.n; ++i) r[i] = -a[i];
  return r;
}
template <class S, class C>
Vec<S> operator*(const C& c, const Vec<S>& a) {
  Vec<S> r(a.n);
  for (int i = 0; i < a.n; ++i) r[i] = c * a[i];
  return r;
}

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  S r(0.0);
  for (int i = 0; i < a.n; ++i) r = r + a[i] * b[i];
  return r;
}

inline double norm(const Vec<double>& a) { return std::sqrt(dot(a, a)); }

inline Vec<double> normalized(const Vec<double>& a) {
  double s = norm(a);
  if (s == 0.0) throw ZeroVectorError();
  return (1.0 / s) * a;
}

/// Doubles of a (possibly dual-valued) vector.
template <class S>
Vec<double> values(const Vec<S>& a) {
  Vec<double> r(a.n);
  for (int i = 0; i < a.n; ++i) r[i] = value(a[i]);
  return r;
}

template <class S>
struct Mat {
  std::array<S, kMaxDim * kMaxDim> e{};
  int rows = 0, cols = 0;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c) {}

  static Mat zeros(int r, int c) { return Mat(r, c); }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1.0);
    return m;
  }

  S& operator()(int i, int j) { return e[i * kMaxDim + j]; }
  const S& operator()(int i, int j) const { return e[i * kMaxDim + j]; }
};

template <class S>
Mat<S> operator+(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> r(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}
template <class S>
Mat<S> operator-(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> r(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}
template <class S, class C>
Mat<S> operator*(const C& c, const Mat<S>& a) {
  Mat<S> r(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r(i, j) = c * a(i, j);
  return r;
}

template <class S>
Vec<S> operator*(const Mat<S>& a, const Vec<S>& v) {
  Vec<S> r(a.rows);
  for (int i = 0; i < a.rows; ++i) {
    S s(0.0);
    for (int j = 0; j < a.cols; ++j) s = s + a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

template <class S>
Mat<S> operator*(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      S s(0.0);
      for (int k = 0; k < a.cols; ++k) s = s + a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

template <class S>
Mat<S> transpose(const Mat<S>& a) {
  Mat<S> r(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r(j, i) = a(i, j);
  return r;
}

template <class S>
Mat<double> values(const Mat<S>& a) {
  Mat<double> r(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r(i, j) = value(a(i, j));
  return r;
}

/// Gaussian elimination with partial pivoting over any dual tower (pivot
/// selection uses the double value part).  Throws SingularTensor when the
/// pivot collapses.
template <class S>
Vec<S> solve(Mat<S> a, Vec<S> b) {
  const int n = a.rows;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(value(a(k, k)));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(value(a(i, k)));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best < 1e-300) throw SingularTensor();
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[k], b[piv]);
    }
    S inv = 1.0 / a(k, k);
    for (int i = k + 1; i < n; ++i) {
      S f = a(i, k) * inv;
      for (int j = k; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
      b[i] = b[i] - f * b[k];
    }
  }
  Vec<S> x(n);
  for (int i = n - 1; i >= 0; --i) {
    S s = b[i];
    for (int j = i + 1; j < n; ++j) s = s - a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

template <class S>
Mat<S> inverse(const Mat<S>& a) {
  const int n = a.rows;
  Mat<S> r(n, n);
  for (int j = 0; j < n; ++j) {
    Vec<S> col = solve(a, Vec<S>::basis(n, j));
    for (int i = 0; i < n; ++i) r(i, j) = col[i];
  }
  return r;
}

inline double det(const Mat<double>& a) {
  const int n = a.rows;
  Mat<double> m = a;
  double d = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
    if (m(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      d = -d;
    }
    d *= m(k, k);
    for (int i = k + 1; i < n; ++i) {
      double f = m(i, k) / m(k, k);
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

struct SymEigen {
  Vec<double> values;
  Mat<double> vectors;  // columns
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix (n <= 4).
inline SymEigen sym_eigen(Mat<double> a) {
  const int n = a.rows;
  Mat<double> v = Mat<double>::identity(n);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          double apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - s * aqj;
          a(q, j) = s * apj + c * aqj;
        }
        for (int i = 0; i < n; ++i) {
          double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
  }
  SymEigen r;
  r.values = Vec<double>(n);
  for (int i = 0; i < n; ++i) r.values[i] = a(i, i);
  r.vectors = v;
  // ascending eigenvalue order
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (r.values[j] < r.values[i]) {
        std::swap(r.values[i], r.values[j]);
        for (int k = 0; k < n; ++k) std::swap(r.vectors(k, i), r.vectors(k, j));
      }
  return r;
}

}  // namespace finsler
