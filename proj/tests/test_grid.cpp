#include <cmath>
#include <complex>

#include "doctest.h"
#include "transmute/errors.hpp"
#include "transmute/grid.hpp"

using namespace transmute;

namespace {

double max_diff(const SampledFunction& f, const SampledFunction& g) {
  double d = 0.0;
  for (int i = 0; i < f.size(); ++i) d = std::max(d, std::abs(f[i] - g[i]));
  return d;
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("construction validates its arguments") {
  CHECK_THROWS_AS(Grid(1.0, 3), std::invalid_argument);   // odd
  CHECK_THROWS_AS(Grid(1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Grid(1.0, -4), std::invalid_argument);
  CHECK_THROWS_AS(Grid(0.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(Grid(-2.0, 10), std::invalid_argument);

  Grid g(1.5, 10);
  CHECK(g.size() == 11);
  CHECK(g.step() == doctest::Approx(0.3));
  CHECK(g.node(g.center()) == 0.0);  // 0 must be a node, exactly
  for (int i = 0; i <= 10; ++i) {
    CHECK(g.node(i) == doctest::Approx(-g.node(g.mirror(i))).epsilon(1e-15));
    if (i > 0) CHECK(g.node(i) > g.node(i - 1));
  }
}

TEST_CASE("nearest_node snaps within half a step and rejects beyond") {
  Grid g(1.0, 10);  // h = 0.2
  CHECK(g.nearest_node(0.0) == 5);
  CHECK(g.nearest_node(0.29) == 6);  // 0.29 sits nearer to node 0.2
  CHECK(g.nearest_node(1.0) == 10);
  CHECK(g.nearest_node(1.05) == 10);  // within h/2 slack past the end
  CHECK_THROWS_AS(g.nearest_node(1.2), GridMismatchError);
  CHECK_THROWS_AS(g.nearest_node(-1.2), GridMismatchError);
}

TEST_CASE("cumulative_integral anchors at zero and is exact on constants") {
  Grid g(1.0, 1000);
  SUBCASE("zero integrand") {
    SampledFunction z(g);
    SampledFunction F = cumulative_integral(z);
    for (int i = 0; i < F.size(); ++i) CHECK(F[i] == Complex(0.0));
  }
  SUBCASE("unit integrand gives the node coordinates exactly") {
    auto one = SampledFunction::sample(g, [](double) { return 1.0; });
    SampledFunction F = cumulative_integral(one);
    CHECK(F[g.center()] == Complex(0.0));
    for (int i = 0; i < F.size(); ++i)
      CHECK(std::abs(F[i] - Complex(g.node(i))) <= 1e-15);
  }
  SUBCASE("quadratic integrand matches x^3/3") {
    auto f = SampledFunction::sample(g, [](double x) { return x * x; });
    SampledFunction F = cumulative_integral(f);
    CHECK(std::abs(F[g.size() - 1] - Complex(1.0 / 3.0)) <= 1e-5);
    CHECK(std::abs(F[0] - Complex(-1.0 / 3.0)) <= 1e-5);
  }
}

TEST_CASE("cumulative_integral flips parity") {
  Grid g(1.0, 200);
  auto even = SampledFunction::sample(
      g, [](double x) { return std::cos(3.0 * x) + x * x; });
  auto odd = SampledFunction::sample(
      g, [](double x) { return std::sin(2.0 * x) + x * x * x; });
  SampledFunction Fe = cumulative_integral(even);
  SampledFunction Fo = cumulative_integral(odd);
  for (int i = 0; i < g.size(); ++i) {
    CHECK(std::abs(Fe[i] + Fe[g.mirror(i)]) <= 1e-14);  // odd output
    CHECK(std::abs(Fo[i] - Fo[g.mirror(i)]) <= 1e-14);  // even output
  }
}

TEST_CASE("l1_norm values and vector-space laws") {
  Grid g(1.0, 1000);
  auto one = SampledFunction::sample(g, [](double) { return 1.0; });
  SampledFunction zero(g);
  auto lin = SampledFunction::sample(g, [](double x) { return x; });
  CHECK(l1_norm(one) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(l1_norm(zero) == 0.0);
  CHECK(l1_norm(lin) == doctest::Approx(1.0).epsilon(1e-5));

  auto f = SampledFunction::sample(g, [](double x) { return std::sin(5 * x); });
  auto s = f + lin;
  CHECK(l1_norm(s) <= l1_norm(f) + l1_norm(lin) + 1e-12);
  CHECK(l1_norm(Complex(-2.5) * f) ==
        doctest::Approx(2.5 * l1_norm(f)).epsilon(1e-13));
}

TEST_CASE("interp_linear is exact at nodes and on linear data") {
  Grid g(1.0, 1000);
  auto f = SampledFunction::sample(g, [](double x) { return x * x; });
  for (int i : {0, 1, 250, 500, 999, 1000})
    CHECK(interp_linear(f, g.node(i)) == f[i]);

  auto lin = SampledFunction::sample(g, [](double x) { return 3.0 * x - 2.0; });
  for (double x : {-0.9993, -0.41, 0.0001, 0.73})
    CHECK(std::abs(interp_linear(lin, x) - Complex(3.0 * x - 2.0)) <= 1e-13);

  const double h = g.step();
  const double x = 0.5 + 0.5 * h;
  CHECK(std::abs(interp_linear(f, x) - Complex(x * x)) <= h * h);

  CHECK_THROWS_AS(interp_linear(f, 1.0 + h), std::domain_error);
  CHECK_THROWS_AS(interp_linear(f, -1.0 - h), std::domain_error);
}

TEST_CASE("derivative stencils") {
  Grid g(1.0, 1000);
  SUBCASE("constants and linears are exact everywhere") {
    auto c = SampledFunction::sample(g, [](double) { return 4.2; });
    auto lin = SampledFunction::sample(g, [](double x) { return x; });
    SampledFunction dc = derivative(c), dl = derivative(lin);
    // roundoff in the one-sided edge stencils scales like eps / h
    for (int i = 0; i < g.size(); ++i) {
      CHECK(std::abs(dc[i]) <= 1e-12);
      CHECK(std::abs(dl[i] - Complex(1.0)) <= 1e-12);
    }
  }
  SUBCASE("sine derivative within 1e-5 of cosine") {
    auto f = SampledFunction::sample(g, [](double x) { return std::sin(x); });
    SampledFunction d = derivative(f);
    double worst = 0.0;
    for (int i = 0; i < g.size(); ++i)
      worst = std::max(worst, std::abs(d[i] - Complex(std::cos(g.node(i)))));
    CHECK(worst <= 1e-5);
  }
}

TEST_CASE("second_difference is exact on cubics") {
  Grid g(1.0, 100);
  auto f = SampledFunction::sample(
      g, [](double x) { return x * x * x - 2.0 * x * x + x; });
  SampledFunction d2 = second_difference(f);
  for (int i = 0; i < g.size(); ++i)
    CHECK(std::abs(d2[i] - Complex(6.0 * g.node(i) - 4.0)) <= 1e-9);
}

TEST_CASE("fundamental theorem round trip is second order") {
  auto residual = [](int n) {
    Grid g(1.0, n);
    auto f = SampledFunction::sample(g, [](double x) { return std::exp(x); });
    SampledFunction rec = cumulative_integral(derivative(f));
    double worst = 0.0;
    for (int i = 0; i < g.size(); ++i)
      worst = std::max(worst, std::abs(rec[i] - (f[i] - Complex(1.0))));
    return worst;
  };
  const double r500 = residual(500), r1000 = residual(1000);
  CHECK(r1000 <= 1e-5);
  CHECK(r1000 <= 0.35 * r500);  // O(h^2)
}

TEST_CASE("sampled-function arithmetic and grid guards") {
  Grid g(1.0, 10), g2(1.0, 12);
  auto f = SampledFunction::sample(g, [](double x) { return x; });
  SampledFunction other(g2);
  CHECK_THROWS_AS(f += other, GridMismatchError);
  CHECK_THROWS_AS(require_same_grid(g, g2), GridMismatchError);

  auto h = Complex(2.0) * f + f;
  for (int i = 0; i < g.size(); ++i)
    CHECK(std::abs(h[i] - Complex(3.0 * g.node(i))) <= 1e-15);
  CHECK(f.at_zero() == Complex(0.0));
  CHECK(h.sup_norm() == doctest::Approx(3.0));

  CHECK_THROWS_AS(SampledFunction(g, std::vector<Complex>(5)),
                  std::invalid_argument);
}

}  // TEST_SUITE
