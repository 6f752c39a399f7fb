#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "finsler/classify.hpp"
#include "finsler/metric_zoo.hpp"
#include "finsler/spray.hpp"

using namespace finsler;

TEST_CASE("euclidean fundamental tensor is the identity everywhere") {
  MetricSpec m = make_euclidean(2);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    Vec<double> x = rng.in_ball(2, 2.0);
    Vec<double> y = rng.unit_vector(2);
    Mat<double> g = fundamental_matrix(m, x, y);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        REQUIRE(g(i, j) == Catch::Approx(i == j ? 1.0 : 0.0).margin(1e-13));
  }
}

TEST_CASE("minkowski-randers is non-reversible with the expected values") {
  Vec<double> b{0.3, 0.0};
  MetricSpec m = make_minkowski_randers(2, b);
  Vec<double> x{0.0, 0.0};
  REQUIRE(eval_F(m, x, Vec<double>{1.0, 0.0}) == Catch::Approx(1.3).margin(1e-14));
  REQUIRE(eval_F(m, x, Vec<double>{-1.0, 0.0}) == Catch::Approx(0.7).margin(1e-14));
  REQUIRE_FALSE(m.reversible);
}

TEST_CASE("randers constructors reject invalid covectors") {
  Vec<double> big{1.0, 0.0};
  REQUIRE_THROWS_AS(make_minkowski_randers(2, big), InvalidRanders);
  Vec<double> huge{2.0, 0.0};
  REQUIRE_THROWS_AS(
      make_randers(2, IdentityField{}, ConstantCovector{huge}, ChartDomain::all_space()),
      InvalidRanders);
}

TEST_CASE("randers with zero covector reduces to the Riemannian base") {
  Vec<double> zero{0.0, 0.0};
  ChartDomain ball = ChartDomain::open_ball(Vec<double>::zeros(2), 1.0, kBallChartMargin);
  MetricSpec randers = make_randers(2, ConformalBallField{1.0}, ConstantCovector{zero}, ball);
  MetricSpec riem = make_hyperbolic(2, 1.0);
  REQUIRE(randers.reversible);
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    Vec<double> x = rng.in_ball(2, 0.7);
    Vec<double> y1 = rng.unit_vector(2);
    Vec<double> y2 = rng.unit_vector(2);
    REQUIRE(eval_F(randers, x, y1) == Catch::Approx(eval_F(riem, x, y1)).epsilon(1e-13));
    // g_y independent of y for the Riemannian reduction
    Mat<double> ga = fundamental_matrix(randers, x, y1);
    Mat<double> gb = fundamental_matrix(randers, x, y2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) REQUIRE(std::abs(ga(i, j) - gb(i, j)) < 1e-10);
  }
}

TEST_CASE("strong convexity holds on every shipped metric") {
  Vec<double> b{0.3, 0.0};
  std::vector<MetricSpec> metrics = {make_euclidean(2), make_hyperbolic(2, 1.0),
                                     make_hyperbolic(3, 2.0), make_minkowski_randers(2, b),
                                     make_hyperbolic_randers(2, 1.0, 0.05)};
  Rng rng(17);
  for (const MetricSpec& m : metrics) {
    for (int t = 0; t < 100; ++t) {
      Vec<double> x = sample_chart_point(m, rng);
      Vec<double> y = rng.unit_vector(m.dim);
      Mat<double> g = fundamental_matrix(m, x, y);
      SymEigen eig = sym_eigen(g);
      REQUIRE(eig.values[0] > 1e-6);
    }
  }
}

TEST_CASE("riemannian members have y-independent fundamental tensors") {
  MetricSpec m = make_hyperbolic(3, 2.0);
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    Vec<double> x = sample_chart_point(m, rng);
    Mat<double> ga = fundamental_matrix(m, x, rng.unit_vector(3));
    Mat<double> gb = fundamental_matrix(m, x, rng.unit_vector(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) REQUIRE(std::abs(ga(i, j) - gb(i, j)) < 1e-10);
  }
}

TEST_CASE("hyperbolic tensor at the origin matches the closed form") {
  MetricSpec m = make_hyperbolic(2, 1.0);
  Vec<double> x{0.0, 0.0};
  Mat<double> g = fundamental_matrix(m, x, Vec<double>{0.3, 0.7});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      REQUIRE(g(i, j) == Catch::Approx(i == j ? 4.0 : 0.0).margin(1e-12));
}

TEST_CASE("classification separates Berwald from non-Berwald presets") {
  const double tol = 1e-8;
  MetricClassification e = classify(make_euclidean(2));
  REQUIRE(e.is_berwald);
  REQUIRE(e.is_riemannian);
  REQUIRE(e.berwald_residual < 1e-10);

  Vec<double> b{0.3, 0.0};
  MetricClassification mk = classify(make_minkowski_randers(2, b));
  REQUIRE(mk.is_berwald);
  REQUIRE_FALSE(mk.is_riemannian);

  MetricClassification hyp = classify(make_hyperbolic(2, 1.0));
  REQUIRE(hyp.is_berwald);
  REQUIRE(hyp.is_riemannian);

  MetricClassification hr = classify(make_hyperbolic_randers(2, 1.0, 0.05));
  REQUIRE_FALSE(hr.is_berwald);
  REQUIRE(hr.berwald_residual > 10.0 * tol);
  REQUIRE_FALSE(hr.is_riemannian);
}

TEST_CASE("classification implies: riemannian => berwald") {
  for (const char* preset : {"euclidean", "hyperbolic:k=1", "hyperbolic:k=2,dim=3"}) {
    MetricClassification c = classify(parse_metric(preset));
    if (c.is_riemannian) REQUIRE(c.is_berwald);
  }
}

TEST_CASE("presets parse and unknown names are rejected") {
  REQUIRE(parse_metric("euclidean").dim == 2);
  REQUIRE(parse_metric("hyperbolic:k=2,dim=3").dim == 3);
  MetricSpec mk = parse_metric("minkowski-randers:b=0.3,0");
  REQUIRE(mk.dim == 2);
  REQUIRE_FALSE(mk.reversible);
  MetricSpec hr = parse_metric("hyperbolic-randers:k=1,eps=0.05");
  REQUIRE(hr.name == "hyperbolic-randers:k=1,eps=0.05");
  REQUIRE_THROWS_AS(parse_metric("kropina:k=1"), Error);
}
