#pragma once

#include <string>
#include <variant>

#include "finsler/dual.hpp"
#include "finsler/errors.hpp"
#include "finsler/geometry.hpp"
#include "finsler/vecmat.hpp"

namespace finsler {

// ---------------------------------------------------------------------------
// Closed-form coefficient fields.  Each is evaluable at any dual-tower scalar
// so that every derivative the curvature layer needs comes out exact.
// ---------------------------------------------------------------------------

/// a_ij = delta_ij.
struct IdentityField {
  template <class S>
  Mat<S> matrix(const Vec<S>& x) const {
    return Mat<S>::identity(x.size());
  }
};

/// a_ij = (2 / (k (1 - |x|^2)))^2 delta_ij on the open unit ball; constant
/// sectional curvature -k^2.
struct ConformalBallField {
  double k = 1.0;

  template <class S>
  Mat<S> matrix(const Vec<S>& x) const {
    S r2(0.0);
    for (int i = 0; i < x.size(); ++i) r2 = r2 + x[i] * x[i];
    S lam = 2.0 / (k * (1.0 - r2));
    Mat<S> m(x.size(), x.size());
    S c = lam * lam;
    for (int i = 0; i < x.size(); ++i) m(i, i) = c;
    return m;
  }
};

using TensorField = std::variant<IdentityField, ConformalBallField>;

struct ConstantCovector {
  Vec<double> b;

  template <class S>
  Vec<S> covector(const Vec<S>& x) const {
    Vec<S> r(x.size());
    for (int i = 0; i < x.size(); ++i) r[i] = S(b[i]);
    return r;
  }
};

using CovectorField = std::variant<ConstantCovector>;

template <class S>
Mat<S> eval_tensor_field(const TensorField& f, const Vec<S>& x) {
  return std::visit([&](const auto& t) { return t.template matrix<S>(x); }, f);
}

template <class S>
Vec<S> eval_covector_field(const CovectorField& f, const Vec<S>& x) {
  return std::visit([&](const auto& t) { return t.template covector<S>(x); }, f);
}

// ---------------------------------------------------------------------------
// Metric families.  Each provides F^2(x, y) templated on the scalar.
// ---------------------------------------------------------------------------

struct EuclideanFamily {
  template <class S>
  S f2(const Vec<S>& x, const Vec<S>& y) const {
    (void)x;
    S s(0.0);
    for (int i = 0; i < y.size(); ++i) s = s + y[i] * y[i];
    return s;
  }
};

struct HyperbolicBallFamily {
  double k = 1.0;

  template <class S>
  S f2(const Vec<S>& x, const Vec<S>& y) const {
    S r2(0.0), y2(0.0);
    for (int i = 0; i < x.size(); ++i) r2 = r2 + x[i] * x[i];
    for (int i = 0; i < y.size(); ++i) y2 = y2 + y[i] * y[i];
    S lam = 2.0 / (k * (1.0 - r2));
    return lam * lam * y2;
  }
};

/// F = |y| + b.y with constant b, |b| < 1.  Locally Minkowski, hence Berwald;
/// non-reversible when b != 0.
struct MinkowskiRandersFamily {
  Vec<double> b;

  template <class S>
  S f2(const Vec<S>& x, const Vec<S>& y) const {
    (void)x;
    using std::sqrt;
    S y2(0.0), by(0.0);
    for (int i = 0; i < y.size(); ++i) {
      y2 = y2 + y[i] * y[i];
      by = by + b[i] * y[i];
    }
    S f = sqrt(y2) + by;
    return f * f;
  }
};

struct RiemannianFamily {
  TensorField a;

  template <class S>
  S f2(const Vec<S>& x, const Vec<S>& y) const {
    Mat<S> m = eval_tensor_field(a, x);
    return dot(y, m * y);
  }
};

/// F = sqrt(a_ij y^i y^j) + b_i y^i.
struct RandersFamily {
  TensorField a;
  CovectorField b;

  template <class S>
  S f2(const Vec<S>& x, const Vec<S>& y) const {
    using std::sqrt;
    Mat<S> m = eval_tensor_field(a, x);
    Vec<S> bv = eval_covector_field(b, x);
    S f = sqrt(dot(y, m * y)) + dot(bv, y);
    return f * f;
  }
};

/// F^2 = sqrt(sum y_i^4).  Positively homogeneous but with degenerate g_y on
/// the coordinate axes; shipped only to exercise strong-convexity failure
/// paths.
struct EllFourFamily {
  template <class S>
  S f2(const Vec<S>& x, const Vec<S>& y) const {
    (void)x;
    using std::sqrt;
    S s(0.0);
    for (int i = 0; i < y.size(); ++i) {
      S q = y[i] * y[i];
      s = s + q * q;
    }
    return sqrt(s);
  }
};

using MetricFamily = std::variant<EuclideanFamily, HyperbolicBallFamily, MinkowskiRandersFamily,
                                  RiemannianFamily, RandersFamily, EllFourFamily>;

// ---------------------------------------------------------------------------

struct MetricSpec {
  int dim = 2;
  ChartDomain chart;
  MetricFamily family;
  bool reversible = true;
  std::string name;
};

/// F^2 at an arbitrary scalar tower.  No domain checks; callers at the public
/// surface validate first.
template <class S>
S eval_f2(const MetricSpec& m, const Vec<S>& x, const Vec<S>& y) {
  return std::visit([&](const auto& fam) { return fam.template f2<S>(x, y); }, m.family);
}

inline void check_point(const MetricSpec& m, const Vec<double>& x) {
  if (x.size() != m.dim) throw Error("point dimension mismatch");
  if (!m.chart.contains(x)) throw EvaluationOutsideDomain();
}

inline void check_vector(const Vec<double>& y) {
  if (norm(y) == 0.0) throw ZeroVectorError();
}

inline double eval_F(const MetricSpec& m, const Vec<double>& x, const Vec<double>& y) {
  check_point(m, x);
  check_vector(y);
  return std::sqrt(eval_f2(m, x, y));
}

}  // namespace finsler
