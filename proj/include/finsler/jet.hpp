#pragma once

#include <array>
#include <vector>

#include "finsler/metric.hpp"

namespace finsler {

/// A seed direction on T(TM): perturb x along dx and y along dy together.
struct JetSeed {
  Vec<double> dx;
  Vec<double> dy;

  static JetSeed x_dir(const Vec<double>& d) { return {d, Vec<double>::zeros(d.size())}; }
  static JetSeed y_dir(const Vec<double>& d) { return {Vec<double>::zeros(d.size()), d}; }
};

/// Value of F^2 together with every mixed directional derivative along a
/// declared seed set.  coeff[mask] is the partial with respect to the seed
/// subset selected by `mask` (bit j = seed j); coeff[0] is the value.
struct JetValue {
  int order = 0;
  double value = 0.0;
  std::array<double, 16> coeff{};

  double partial(unsigned mask) const { return coeff[mask]; }
  /// Full mixed partial with respect to all declared seeds.
  double full() const { return coeff[(1u << order) - 1u]; }
};

namespace detail {

template <int M>
Tower<M> jet_scalar(double v, const std::array<double, 4>& seed_vals) {
  if constexpr (M == 0) {
    (void)seed_vals;
    return v;
  } else {
    Tower<M> r;
    r.re = jet_scalar<M - 1>(v, seed_vals);
    r.du = Tower<M - 1>(seed_vals[M - 1]);
    return r;
  }
}

inline void jet_extract(double s, unsigned /*mask*/, int /*level*/, std::array<double, 16>& out,
                        unsigned acc) {
  out[acc] = s;
}

template <class T>
void jet_extract(const Dual<T>& s, unsigned mask, int level, std::array<double, 16>& out,
                 unsigned acc) {
  // level counts down; bit (level-1) distinguishes re/du at this depth
  jet_extract(s.re, mask, level - 1, out, acc);
  jet_extract(s.du, mask, level - 1, out, acc | (1u << (level - 1)));
}

template <int M>
JetValue evaluate_jet_m(const MetricSpec& m, const Vec<double>& x, const Vec<double>& y,
                        const std::vector<JetSeed>& seeds) {
  using S = Tower<M>;
  Vec<S> X(x.size()), Y(y.size());
  std::array<double, 4> sv{};
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < M; ++j) sv[j] = seeds[j].dx[i];
    X[i] = jet_scalar<M>(x[i], sv);
  }
  for (int i = 0; i < y.size(); ++i) {
    for (int j = 0; j < M; ++j) sv[j] = seeds[j].dy[i];
    Y[i] = jet_scalar<M>(y[i], sv);
  }
  S f = eval_f2(m, X, Y);
  JetValue out;
  out.order = M;
  jet_extract(f, 0, M, out.coeff, 0);
  out.value = out.coeff[0];
  return out;
}

}  // namespace detail

/// Exact directional jets of F^2 at (x, y) along up to four seeds.
/// Dual-tower arithmetic throughout; no truncation error.
inline JetValue evaluate_jet(const MetricSpec& m, const Point& x, const TangentVector& y,
                             const std::vector<JetSeed>& seeds, int order) {
  if (order < 1 || order > 4) throw UnsupportedOrder();
  if (static_cast<int>(seeds.size()) != order)
    throw Error("seed count must equal the requested order");
  check_point(m, x.coords);
  check_vector(y.components);
  switch (order) {
    case 1:
      return detail::evaluate_jet_m<1>(m, x.coords, y.components, seeds);
    case 2:
      return detail::evaluate_jet_m<2>(m, x.coords, y.components, seeds);
    case 3:
      return detail::evaluate_jet_m<3>(m, x.coords, y.components, seeds);
    default:
      return detail::evaluate_jet_m<4>(m, x.coords, y.components, seeds);
  }
}

}  // namespace finsler
