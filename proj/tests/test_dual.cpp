#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "finsler/dual.hpp"
#include "finsler/vecmat.hpp"

using namespace finsler;

TEST_CASE("first derivative of a composite expression") {
  // f(t) = sqrt(t^2 + 3t), f'(2) = (2t+3) / (2 sqrt(t^2+3t)) at t=2
  D1 t{2.0, 1.0};
  D1 f = sqrt(t * t + 3.0 * t);
  double expect = 7.0 / (2.0 * std::sqrt(10.0));
  REQUIRE(f.re == Catch::Approx(std::sqrt(10.0)).epsilon(1e-15));
  REQUIRE(f.du == Catch::Approx(expect).epsilon(1e-14));
}

TEST_CASE("nested towers give exact mixed second derivatives") {
  // f(a, b) = a^2 b + b^3, d2f/da db = 2a
  double a0 = 1.7, b0 = -0.6;
  D2 a{D1{a0, 1.0}, D1{0.0, 0.0}};
  D2 b{D1{b0, 0.0}, D1{1.0, 0.0}};
  D2 f = a * a * b + b * b * b;
  REQUIRE(value(f) == Catch::Approx(a0 * a0 * b0 + b0 * b0 * b0));
  REQUIRE(f.du.du == Catch::Approx(2.0 * a0).epsilon(1e-15));   // mixed
  REQUIRE(f.re.du == Catch::Approx(2.0 * a0 * b0).epsilon(1e-15));  // df/da
  REQUIRE(f.du.re == Catch::Approx(a0 * a0 + 3.0 * b0 * b0).epsilon(1e-15));  // df/db
}

TEST_CASE("division and quotient rule through three levels") {
  // f(t) = 1 / (1 + t^2); f'''(t) closed form at t = 0.5
  double t0 = 0.5;
  D3 t{D2{D1{t0, 1.0}, D1{0.0, 0.0}}, D2{D1{1.0, 0.0}, D1{0.0, 0.0}}};
  // seed the same variable at all three levels for d^3/dt^3
  t.re.du = D1{1.0, 0.0};
  D3 f = 1.0 / (1.0 + t * t);
  auto fd3 = [](double x) {
    // f''' = 24x(1 - x^2) / (1+x^2)^4
    return 24.0 * x * (1.0 - x * x) / std::pow(1.0 + x * x, 4);
  };
  REQUIRE(f.du.du.du == Catch::Approx(fd3(t0)).epsilon(1e-12));
}

TEST_CASE("small linear solve over dual scalars propagates derivatives") {
  // A(t) x = b with A = [[2+t, 0], [0, 4]], b = (2, 4): x0 = 2/(2+t)
  D1 t{0.0, 1.0};
  Mat<D1> A(2, 2);
  A(0, 0) = 2.0 + t;
  A(1, 1) = D1{4.0, 0.0};
  Vec<D1> b(2);
  b[0] = D1{2.0, 0.0};
  b[1] = D1{4.0, 0.0};
  Vec<D1> x = solve(A, b);
  REQUIRE(value(x[0]) == Catch::Approx(1.0));
  REQUIRE(x[0].du == Catch::Approx(-0.5).epsilon(1e-14));  // d/dt 2/(2+t) at 0
  REQUIRE(value(x[1]) == Catch::Approx(1.0));
}

TEST_CASE("symmetric eigen decomposition on a known matrix") {
  Mat<double> m(2, 2);
  m(0, 0) = 2.0;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  m(1, 1) = 2.0;
  SymEigen e = sym_eigen(m);
  REQUIRE(e.values[0] == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(e.values[1] == Catch::Approx(3.0).margin(1e-12));
}
