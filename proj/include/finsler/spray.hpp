#pragma once

#include "finsler/metric.hpp"

namespace finsler {

// ---------------------------------------------------------------------------
// Generic directional derivative kernels.  All run at an arbitrary base
// scalar S so the curvature layer can stack its own jets on top of them:
// nesting depth composes (spray at Dual<Dual<double>> drives F^2 evaluations
// at depth five).
// ---------------------------------------------------------------------------

/// g_y(u, v) = 1/2 D^2_y F^2 [u, v].
template <class S>
S g_bilinear(const MetricSpec& m, const Vec<S>& x, const Vec<S>& y, const Vec<S>& u,
             const Vec<S>& v) {
  using A = Dual<S>;
  using B = Dual<A>;
  const int n = x.size();
  Vec<B> X(n), Y(n);
  for (int i = 0; i < n; ++i) {
    X[i] = B{A{x[i], S(0.0)}, A{S(0.0), S(0.0)}};
    Y[i] = B{A{y[i], u[i]}, A{v[i], S(0.0)}};
  }
  B f = eval_f2(m, X, Y);
  return 0.5 * f.du.du;
}

/// Fundamental tensor matrix g_ij(x, y).
template <class S>
Mat<S> fundamental_matrix(const MetricSpec& m, const Vec<S>& x, const Vec<S>& y) {
  const int n = x.size();
  Mat<S> g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      S v = g_bilinear(m, x, y, Vec<S>::basis(n, i), Vec<S>::basis(n, j));
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

/// d/dx[w] of g_(x,y)(u, v) at fixed y.
template <class S>
S dgdx(const MetricSpec& m, const Vec<S>& x, const Vec<S>& y, const Vec<S>& u, const Vec<S>& v,
       const Vec<S>& w) {
  using A = Dual<S>;
  using B = Dual<A>;
  using C = Dual<B>;
  const int n = x.size();
  Vec<C> X(n), Y(n);
  for (int i = 0; i < n; ++i) {
    X[i] = C{B{A{x[i], S(0.0)}, A{S(0.0), S(0.0)}}, B{A{w[i], S(0.0)}, A{S(0.0), S(0.0)}}};
    Y[i] = C{B{A{y[i], u[i]}, A{v[i], S(0.0)}}, B{A{S(0.0), S(0.0)}, A{S(0.0), S(0.0)}}};
  }
  C f = eval_f2(m, X, Y);
  return 0.5 * f.du.du.du;
}

/// Cartan tensor C_y(u, v, w) = 1/4 D^3_y F^2 [u, v, w].
template <class S>
S cartan(const MetricSpec& m, const Vec<S>& x, const Vec<S>& y, const Vec<S>& u, const Vec<S>& v,
         const Vec<S>& w) {
  using A = Dual<S>;
  using B = Dual<A>;
  using C = Dual<B>;
  const int n = x.size();
  Vec<C> X(n), Y(n);
  for (int i = 0; i < n; ++i) {
    X[i] = C{B{A{x[i], S(0.0)}, A{S(0.0), S(0.0)}}, B{A{S(0.0), S(0.0)}, A{S(0.0), S(0.0)}}};
    Y[i] = C{B{A{y[i], u[i]}, A{v[i], S(0.0)}}, B{A{w[i], S(0.0)}, A{S(0.0), S(0.0)}}};
  }
  C f = eval_f2(m, X, Y);
  return 0.25 * f.du.du.du;
}

/// Geodesic coefficients G^i = 1/4 g^{il} (2 dg_jl/dx^k - dg_jk/dx^l) y^j y^k.
/// The x-derivative contractions with y are taken as directional seeds, so a
/// single evaluation costs O(n) jets.
template <class S>
Vec<S> spray_coeffs(const MetricSpec& m, const Vec<S>& x, const Vec<S>& y) {
  const int n = x.size();
  Mat<S> g = fundamental_matrix(m, x, y);
  Vec<S> a(n);
  for (int l = 0; l < n; ++l) {
    Vec<S> el = Vec<S>::basis(n, l);
    a[l] = 2.0 * dgdx(m, x, y, el, y, y) - dgdx(m, x, y, y, y, el);
  }
  Vec<S> G = solve(g, a);
  for (int i = 0; i < n; ++i) G[i] = 0.25 * G[i];
  return G;
}

/// Nonlinear connection N^i_j = dG^i/dy^j.
template <class S>
Mat<S> spray_connection(const MetricSpec& m, const Vec<S>& x, const Vec<S>& y) {
  using A = Dual<S>;
  const int n = x.size();
  Mat<S> N(n, n);
  for (int j = 0; j < n; ++j) {
    Vec<A> X(n), Y(n);
    for (int i = 0; i < n; ++i) {
      X[i] = A{x[i], S(0.0)};
      Y[i] = A{y[i], S(i == j ? 1.0 : 0.0)};
    }
    Vec<A> G = spray_coeffs(m, X, Y);
    for (int i = 0; i < n; ++i) N(i, j) = G[i].du;
  }
  return N;
}

/// Riemann curvature R^i_k(y) from the spray:
///   R^i_k = 2 dG^i/dx^k - y^j d2G^i/dx^j dy^k + 2 G^j d2G^i/dy^j dy^k
///           - dG^i/dy^j dG^j/dy^k
inline Mat<double> curvature_matrix(const MetricSpec& m, const Vec<double>& x,
                                    const Vec<double>& y) {
  const int n = x.size();
  Vec<double> G = spray_coeffs(m, x, y);
  Mat<double> N = spray_connection(m, x, y);
  Mat<double> R(n, n);
  for (int k = 0; k < n; ++k) {
    // dG/dx^k
    Vec<D1> X1(n), Y1(n);
    for (int i = 0; i < n; ++i) {
      X1[i] = D1{x[i], i == k ? 1.0 : 0.0};
      Y1[i] = D1{y[i], 0.0};
    }
    Vec<D1> dGdx = spray_coeffs(m, X1, Y1);

    // y^j d2G/dx^j dy^k  (x-seed along y, y-seed along e_k)
    Vec<D2> X2(n), Y2(n);
    for (int i = 0; i < n; ++i) {
      X2[i] = D2{D1{x[i], y[i]}, D1{0.0, 0.0}};
      Y2[i] = D2{D1{y[i], 0.0}, D1{i == k ? 1.0 : 0.0, 0.0}};
    }
    Vec<D2> mixed = spray_coeffs(m, X2, Y2);

    // G^j d2G/dy^j dy^k  (y-seeds along G and e_k)
    Vec<D2> X3(n), Y3(n);
    for (int i = 0; i < n; ++i) {
      X3[i] = D2{D1{x[i], 0.0}, D1{0.0, 0.0}};
      Y3[i] = D2{D1{y[i], G[i]}, D1{i == k ? 1.0 : 0.0, 0.0}};
    }
    Vec<D2> hess = spray_coeffs(m, X3, Y3);

    for (int i = 0; i < n; ++i) {
      double nn = 0.0;
      for (int j = 0; j < n; ++j) nn += N(i, j) * N(j, k);
      R(i, k) = 2.0 * dGdx[i].du - mixed[i].du.du + 2.0 * hess[i].du.du - nn;
    }
  }
  return R;
}

// ---------------------------------------------------------------------------
// Public operations on the geometric types.
// ---------------------------------------------------------------------------

struct FundamentalTensor {
  Point base;
  TangentVector reference;
  Mat<double> matrix;
};

struct SprayData {
  Point base;
  TangentVector velocity;
  Vec<double> G;
  Mat<double> N;
};

struct CurvatureOperator {
  Point base;
  TangentVector reference;
  Mat<double> matrix;
};

inline constexpr double kConditionLimit = 1e10;

inline void check_strong_convexity(const Mat<double>& g) {
  SymEigen eig = sym_eigen(g);
  double lo = eig.values[0];
  double hi = eig.values[g.rows - 1];
  if (lo <= 0.0 || hi / lo > kConditionLimit) throw SingularTensor();
}

inline FundamentalTensor fundamental_tensor(const MetricSpec& m, const Point& x,
                                            const TangentVector& y) {
  check_point(m, x.coords);
  check_vector(y.components);
  Mat<double> g = fundamental_matrix(m, x.coords, y.components);
  check_strong_convexity(g);
  return {x, y, g};
}

inline SprayData spray(const MetricSpec& m, const Point& x, const TangentVector& y) {
  check_point(m, x.coords);
  check_vector(y.components);
  check_strong_convexity(fundamental_matrix(m, x.coords, y.components));
  return {x, y, spray_coeffs(m, x.coords, y.components),
          spray_connection(m, x.coords, y.components)};
}

inline CurvatureOperator riemann_curvature(const MetricSpec& m, const Point& x,
                                           const TangentVector& y) {
  check_point(m, x.coords);
  check_vector(y.components);
  check_strong_convexity(fundamental_matrix(m, x.coords, y.components));
  return {x, y, curvature_matrix(m, x.coords, y.components)};
}

/// Flag curvature K(P, y) = g_y(R_y u, u) / (g_y(y,y) g_y(u,u) - g_y(y,u)^2).
inline double flag_curvature(const MetricSpec& m, const Flag& flag) {
  check_point(m, flag.base.coords);
  check_vector(flag.pole);
  const Vec<double>& x = flag.base.coords;
  const Vec<double>& y = flag.pole;
  const Vec<double>& u = flag.transverse;
  Mat<double> g = fundamental_matrix(m, x, y);
  double gyy = dot(y, g * y);
  double guu = dot(u, g * u);
  double gyu = dot(y, g * u);
  double denom = gyy * guu - gyu * gyu;
  if (denom < 1e-12) throw DegenerateFlag();
  Mat<double> R = curvature_matrix(m, x, y);
  double num = dot(R * u, g * u);
  return num / denom;
}

}  // namespace finsler
