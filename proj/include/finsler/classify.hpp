#pragma once

#include <vector>

#include "finsler/metric_zoo.hpp"
#include "finsler/spray.hpp"

namespace finsler {

struct MetricClassification {
  bool is_riemannian = false;
  bool is_berwald = false;
  double berwald_residual = 0.0;  // relative deviation of G from quadratic-in-y
};

namespace detail {

/// Least-squares solve of the small dense normal equations (q <= 10).
inline std::vector<double> lsq_quadratic_fit(const std::vector<std::vector<double>>& rows,
                                             const std::vector<double>& rhs) {
  const int q = static_cast<int>(rows[0].size());
  std::vector<double> ata(q * q, 0.0), atb(q, 0.0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int i = 0; i < q; ++i) {
      atb[i] += rows[r][i] * rhs[r];
      for (int j = 0; j < q; ++j) ata[i * q + j] += rows[r][i] * rows[r][j];
    }
  }
  // plain Gauss with partial pivoting
  std::vector<int> perm(q);
  for (int i = 0; i < q; ++i) perm[i] = i;
  for (int k = 0; k < q; ++k) {
    int piv = k;
    for (int i = k + 1; i < q; ++i)
      if (std::abs(ata[i * q + k]) > std::abs(ata[piv * q + k])) piv = i;
    if (piv != k) {
      for (int j = 0; j < q; ++j) std::swap(ata[k * q + j], ata[piv * q + j]);
      std::swap(atb[k], atb[piv]);
    }
    double d = ata[k * q + k];
    if (std::abs(d) < 1e-300) d = 1e-300;
    for (int i = k + 1; i < q; ++i) {
      double f = ata[i * q + k] / d;
      for (int j = k; j < q; ++j) ata[i * q + j] -= f * ata[k * q + j];
      atb[i] -= f * atb[k];
    }
  }
  std::vector<double> c(q, 0.0);
  for (int i = q - 1; i >= 0; --i) {
    double s = atb[i];
    for (int j = i + 1; j < q; ++j) s -= ata[i * q + j] * c[j];
    double d = ata[i * q + i];
    c[i] = std::abs(d) < 1e-300 ? 0.0 : s / d;
  }
  return c;
}

}  // namespace detail

/// Berwald detection: at each sampled base point, fit G^i(x, .) by a
/// quadratic form in y over sampled unit directions and measure the worst
/// relative deviation.  A Berwald spray fits exactly.
inline MetricClassification classify(const MetricSpec& m, int sample_points = 20,
                                     int directions = 24, std::uint64_t seed = 2024,
                                     double tol = 1e-8) {
  if (sample_points < 20) throw Error("classification needs at least 20 sample points");
  Rng rng(seed);
  const int n = m.dim;
  const int q = n * (n + 1) / 2;

  double residual = 0.0;
  double scale = 0.0;
  double riem_dev = 0.0;

  for (int s = 0; s < sample_points; ++s) {
    Vec<double> x = sample_chart_point(m, rng);

    // y-dependence of g: Riemannian iff the fundamental tensor ignores y.
    Mat<double> g0 = fundamental_matrix(m, x, rng.unit_vector(n));
    Mat<double> g1 = fundamental_matrix(m, x, rng.unit_vector(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) riem_dev = std::max(riem_dev, std::abs(g0(i, j) - g1(i, j)));

    std::vector<Vec<double>> ys;
    std::vector<std::vector<double>> rows;
    for (int d = 0; d < directions; ++d) {
      Vec<double> y = rng.unit_vector(n);
      ys.push_back(y);
      std::vector<double> row;
      row.reserve(q);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) row.push_back(i == j ? y[i] * y[j] : 2.0 * y[i] * y[j]);
      rows.push_back(std::move(row));
    }
    std::vector<std::vector<double>> gvals(directions);
    for (int d = 0; d < directions; ++d) {
      Vec<double> G = spray_coeffs(m, x, ys[d]);
      gvals[d].resize(n);
      for (int i = 0; i < n; ++i) {
        gvals[d][i] = G[i];
        scale = std::max(scale, std::abs(G[i]));
      }
    }
    for (int i = 0; i < n; ++i) {
      std::vector<double> rhs(directions);
      for (int d = 0; d < directions; ++d) rhs[d] = gvals[d][i];
      std::vector<double> c = detail::lsq_quadratic_fit(rows, rhs);
      for (int d = 0; d < directions; ++d) {
        double fit = 0.0;
        for (int kq = 0; kq < q; ++kq) fit += c[kq] * rows[d][kq];
        residual = std::max(residual, std::abs(rhs[d] - fit));
      }
    }
  }

  MetricClassification out;
  out.berwald_residual = scale > 1e-12 ? residual / scale : 0.0;
  out.is_berwald = out.berwald_residual < tol;
  out.is_riemannian = riem_dev < 1e-10;
  return out;
}

}  // namespace finsler
