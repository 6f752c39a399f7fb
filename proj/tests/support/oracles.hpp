#pragma once

// Test-only oracles.  These deliberately take independent computational
// routes (finite differences, closed forms) so that agreement with the
// dual-tower engine is meaningful.

#include <vector>

#include "finsler/jet.hpp"
#include "finsler/metric.hpp"

namespace finsler::testing {

/// Central finite differences of F^2 along a seed set: 6th-order stencil per
/// seed, recursively nested for mixed partials.
inline double fd_mixed_partial(const MetricSpec& m, const Vec<double>& x, const Vec<double>& y,
                               const std::vector<JetSeed>& seeds, int idx, double h) {
  if (idx < 0) return eval_f2(m, x, y);
  static const double w[7] = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60};
  double acc = 0.0;
  for (int o = -3; o <= 3; ++o) {
    if (o == 0) continue;
    Vec<double> xs = x + (o * h) * seeds[idx].dx;
    Vec<double> ys = y + (o * h) * seeds[idx].dy;
    acc += w[o + 3] * fd_mixed_partial(m, xs, ys, seeds, idx - 1, h);
  }
  return acc / h;
}

struct FdJetValue {
  double value;
  double full;
};

/// Finite-difference analogue of evaluate_jet (full mixed partial only).
inline FdJetValue finite_difference_oracle(const MetricSpec& m, const Vec<double>& x,
                                           const Vec<double>& y, const std::vector<JetSeed>& seeds,
                                           int order, double h = 1e-3) {
  if (order < 1 || order > 4) throw UnsupportedOrder();
  if (static_cast<int>(seeds.size()) != order)
    throw Error("seed count must equal the requested order");
  FdJetValue out;
  out.value = eval_f2(m, x, y);
  out.full = fd_mixed_partial(m, x, y, seeds, order - 1, h);
  return out;
}

}  // namespace finsler::testing
