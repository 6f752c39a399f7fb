#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "finsler/metric.hpp"
#include "finsler/rng.hpp"

namespace finsler {

inline constexpr double kBallChartMargin = 0.02;

inline void require_dim(int dim) {
  if (dim < 2 || dim > kMaxDim) throw Error("dimension must be in 2..4");
}

inline MetricSpec make_euclidean(int dim) {
  require_dim(dim);
  MetricSpec m;
  m.dim = dim;
  m.chart = ChartDomain::all_space();
  m.family = EuclideanFamily{};
  m.reversible = true;
  m.name = "euclidean";
  return m;
}

inline MetricSpec make_hyperbolic(int dim, double k) {
  require_dim(dim);
  if (k <= 0.0) throw Error("hyperbolic curvature scale k must be positive");
  MetricSpec m;
  m.dim = dim;
  m.chart = ChartDomain::open_ball(Vec<double>::zeros(dim), 1.0, kBallChartMargin);
  m.family = HyperbolicBallFamily{k};
  m.reversible = true;
  std::ostringstream name;
  name << "hyperbolic:k=" << k;
  m.name = name.str();
  return m;
}

inline MetricSpec make_minkowski_randers(int dim, const Vec<double>& b) {
  require_dim(dim);
  if (b.size() != dim) throw Error("covector dimension mismatch");
  if (norm(b) >= 1.0) throw InvalidRanders("Randers covector must satisfy |b| < 1");
  MetricSpec m;
  m.dim = dim;
  m.chart = ChartDomain::all_space();
  m.family = MinkowskiRandersFamily{b};
  m.reversible = norm(b) == 0.0;
  m.name = "minkowski-randers";
  return m;
}

/// Generic Randers metric F = sqrt(a_ij y^i y^j) + b_i y^i.  Validity
/// (a positive definite, a-norm of b below one) is checked on chart samples.
inline MetricSpec make_randers(int dim, TensorField a, CovectorField b, ChartDomain chart,
                               int validity_samples = 64, std::uint64_t seed = 12345) {
  require_dim(dim);
  MetricSpec m;
  m.dim = dim;
  m.chart = chart;
  Rng rng(seed);
  for (int s = 0; s < validity_samples; ++s) {
    Vec<double> x = Vec<double>::zeros(dim);
    if (const auto* ball = std::get_if<OpenBall>(&chart.kind))
      x = rng.in_ball(dim, ball->radius * 0.98);
    else
      x = rng.in_ball(dim, 2.0);
    if (!chart.contains(x)) continue;
    Mat<double> am = eval_tensor_field(a, x);
    SymEigen eig = sym_eigen(am);
    if (eig.values[0] <= 0.0)
      throw InvalidRanders("Randers base tensor not positive definite on chart sample");
    Vec<double> bv = eval_covector_field(b, x);
    double bnorm2 = dot(bv, solve(am, bv));  // |b|_a^2 = b . a^{-1} b
    if (bnorm2 >= 1.0) throw InvalidRanders("Randers covector has a-norm >= 1 on chart sample");
  }
  bool zero_b = true;
  {
    Vec<double> b0 = eval_covector_field(b, Vec<double>::zeros(dim));
    zero_b = norm(b0) == 0.0;
  }
  m.family = RandersFamily{std::move(a), std::move(b)};
  m.reversible = zero_b;
  m.name = "randers";
  return m;
}

/// Hyperbolic base tensor plus a small constant covector eps dx^1: the stock
/// non-Berwald test metric with curvature near -k^2 and small T-curvature.
/// Its actual bounds are measured, never assumed.
inline MetricSpec make_hyperbolic_randers(int dim, double k, double eps) {
  require_dim(dim);
  Vec<double> b = Vec<double>::zeros(dim);
  b[0] = eps;
  ChartDomain chart = ChartDomain::open_ball(Vec<double>::zeros(dim), 1.0, kBallChartMargin);
  MetricSpec m = make_randers(dim, ConformalBallField{k}, ConstantCovector{b}, chart);
  std::ostringstream name;
  name << "hyperbolic-randers:k=" << k << ",eps=" << eps;
  m.name = name.str();
  return m;
}

inline MetricSpec make_riemannian(int dim, TensorField a, ChartDomain chart) {
  require_dim(dim);
  MetricSpec m;
  m.dim = dim;
  m.chart = chart;
  m.family = RiemannianFamily{std::move(a)};
  m.reversible = true;
  m.name = "riemannian";
  return m;
}

/// Degenerate-on-axes quartic norm; for negative tests only.
inline MetricSpec make_ell4(int dim) {
  require_dim(dim);
  MetricSpec m;
  m.dim = dim;
  m.chart = ChartDomain::all_space();
  m.family = EllFourFamily{};
  m.reversible = true;
  m.name = "ell4";
  return m;
}

// ---------------------------------------------------------------------------
// Preset parsing: "euclidean", "hyperbolic:k=1", "minkowski-randers:b=0.3,0",
// "hyperbolic-randers:k=1,eps=0.05".  An optional dim=<n> parameter selects
// the dimension (default 2; for minkowski-randers the length of b wins).
// ---------------------------------------------------------------------------

namespace detail {

/// "k=1,eps=0.05,b=0.3,0" -> {k: [1], eps: [0.05], b: [0.3, 0]}.
/// A comma-separated token without '=' extends the previous key's vector.
inline std::map<std::string, std::vector<double>> parse_params(const std::string& s) {
  std::map<std::string, std::vector<double>> out;
  std::string last_key;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) {
      if (last_key.empty()) throw Error("malformed metric parameters: " + s);
      out[last_key].push_back(std::stod(tok));
    } else {
      last_key = tok.substr(0, eq);
      out[last_key].push_back(std::stod(tok.substr(eq + 1)));
    }
  }
  return out;
}

inline double param_or(const std::map<std::string, std::vector<double>>& p, const std::string& key,
                       double fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  return it->second.at(0);
}

}  // namespace detail

inline MetricSpec parse_metric(const std::string& preset) {
  std::string name = preset;
  std::map<std::string, std::vector<double>> params;
  if (auto colon = preset.find(':'); colon != std::string::npos) {
    name = preset.substr(0, colon);
    params = detail::parse_params(preset.substr(colon + 1));
  }
  int dim = static_cast<int>(detail::param_or(params, "dim", 2));
  if (name == "euclidean") return make_euclidean(dim);
  if (name == "hyperbolic") return make_hyperbolic(dim, detail::param_or(params, "k", 1.0));
  if (name == "minkowski-randers") {
    auto it = params.find("b");
    if (it == params.end()) throw Error("minkowski-randers preset needs b=<components>");
    Vec<double> b(static_cast<int>(it->second.size()));
    for (int i = 0; i < b.size(); ++i) b[i] = it->second[i];
    return make_minkowski_randers(b.size(), b);
  }
  if (name == "hyperbolic-randers")
    return make_hyperbolic_randers(dim, detail::param_or(params, "k", 1.0),
                                   detail::param_or(params, "eps", 0.05));
  if (name == "ell4") return make_ell4(dim);
  throw Error("unknown metric preset: " + preset);
}

/// Seeded chart sample inside the valid region (slightly shrunk for ball
/// charts so stencil work stays inside).
inline Vec<double> sample_chart_point(const MetricSpec& m, Rng& rng, double shrink = 0.25) {
  if (const auto* ball = std::get_if<OpenBall>(&m.chart.kind)) {
    Vec<double> x = rng.in_ball(m.dim, ball->radius * (1.0 - shrink));
    for (int i = 0; i < m.dim; ++i) x[i] += ball->center.size() ? ball->center[i] : 0.0;
    return x;
  }
  return rng.in_ball(m.dim, 1.0);
}

}  // namespace finsler
