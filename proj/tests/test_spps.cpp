#include <cmath>
#include <complex>

#include "doctest.h"
#include "support/oracles.hpp"
#include "transmute/errors.hpp"
#include "transmute/potential.hpp"
#include "transmute/spps.hpp"

using namespace transmute;

namespace {

constexpr double kPi = 3.14159265358979323846;

double max_diff(const SampledFunction& f, const SampledFunction& g) {
  double d = 0.0;
  for (int i = 0; i < f.size(); ++i) d = std::max(d, std::abs(f[i] - g[i]));
  return d;
}

template <class F>
double max_diff_fn(const SampledFunction& f, F&& ref) {
  double d = 0.0;
  for (int i = 0; i < f.size(); ++i)
    d = std::max(d, std::abs(f[i] - Complex(ref(f.grid().node(i)))));
  return d;
}

SLBase base_for(const std::string& desc, int n, int kmax) {
  Grid g(1.0, n);
  return build_slbase(canonical_pair(make_potential(g, desc)), kmax);
}

}  // namespace

TEST_SUITE("spps") {

TEST_CASE("free equation at lambda = 1 gives the hyperbolic pair") {
  // quadrature error in the recursive members floors near 5e-8 at n = 1000;
  // the 1e-8 target needs the finer grid
  SLBase base = base_for("zero", 8000, 30);
  SPPSSolution sol = spps_solve(base, 1.0);
  CHECK(max_diff_fn(sol.v1, [](double x) { return std::cosh(x); }) <= 1e-8);
  // the odd-member chain carries a slightly larger quadrature constant
  CHECK(max_diff_fn(sol.v2, [](double x) { return std::sinh(x); }) <= 2e-8);
  CHECK(sol.k_used >= 4);
  CHECK(sol.k_used <= 16);
  CHECK(sol.tail_estimate <= 1e-11);
}

TEST_CASE("lambda = 0 returns the pair itself, bit for bit") {
  SLBase base = base_for("const:1", 500, 12);
  SPPSSolution sol = spps_solve(base, 0.0);
  CHECK(sol.k_used == 0);
  for (int i = 0; i < sol.v1.size(); ++i) {
    CHECK(sol.v1[i] == base.members[0][i]);
    CHECK(sol.v2[i] == base.members[1][i]);
  }
}

TEST_CASE("quadratic potential against the stepping oracle") {
  SLBase base = base_for("poly:0,0,1", 1000, 30);
  SPPSSolution sol = spps_solve(base, 1.0);
  auto w = [](double x) { return x * x + 1.0; };  // q + lambda
  SampledFunction ref1 = oracle::rk4_ivp(sol.v1.grid(), w, 1.0, 0.0);
  SampledFunction ref2 = oracle::rk4_ivp(sol.v2.grid(), w, 0.0, 1.0);
  CHECK(max_diff(sol.v1, ref1) <= 1e-4);
  CHECK(max_diff(sol.v2, ref2) <= 1e-4);
}

TEST_CASE("general solution composition") {
  SLBase base = base_for("const:1", 1000, 30);
  SUBCASE("unit weights against the shifted trigonometric solution") {
    // v'' - v = -5 v  <=>  v'' = -4 v: data (1,0) -> cos 2x, (0,1) -> sin(2x)/2
    SampledFunction v = general_solution(base, -5.0, 1.0, 1.0);
    CHECK(max_diff_fn(v, [](double x) {
            return std::cos(2.0 * x) + 0.5 * std::sin(2.0 * x);
          }) <= 1e-5);
  }
  SUBCASE("trivial weights") {
    SPPSSolution sol = spps_solve(base, 2.0);
    SampledFunction v1 = general_solution(base, 2.0, 1.0, 0.0);
    CHECK(max_diff(v1, sol.v1) == 0.0);
    SampledFunction z = general_solution(base, 2.0, 0.0, 0.0);
    CHECK(z.sup_norm() == 0.0);
  }
}

TEST_CASE("series terms decay factorially") {
  SLBase base = base_for("const:1", 500, 24);
  const double lambda = 3.0;
  double prev = 1e300;
  for (int k = 2; 2 * k < static_cast<int>(base.members.size()); ++k) {
    const double term = std::pow(lambda, k) * base.members[2 * k].sup_norm() /
                        std::tgamma(2.0 * k + 1.0);
    CHECK(term <= 0.9 * prev);
    prev = term;
  }
}

TEST_CASE("solution pair keeps unit Wronskian at complex lambda") {
  SLBase base = base_for("const:1", 1000, 30);
  SPPSSolution sol = spps_solve(base, Complex(2.0, 1.0));
  SampledFunction d1 = derivative(sol.v1), d2 = derivative(sol.v2);
  const int c = sol.v1.grid().center();
  const Complex w = sol.v1[c] * d2[c] - d1[c] * sol.v2[c];
  CHECK(std::abs(w - Complex(1.0)) <= 1e-6);
  CHECK(std::abs(sol.v1[c] - Complex(1.0)) <= 1e-14);
  CHECK(std::abs(sol.v2[c]) <= 1e-14);
}

TEST_CASE("solutions satisfy the equation ever better") {
  auto residual = [](int n) {
    SLBase base = base_for("const:1", n, 30);
    SPPSSolution sol = spps_solve(base, -2.0);
    SampledFunction r = second_difference(sol.v1);
    SampledFunction q = make_potential(sol.v1.grid(), "const:1");
    for (int i = 0; i < r.size(); ++i)
      r[i] -= (q[i] + Complex(-2.0)) * sol.v1[i];
    return l1_norm(r);
  };
  CHECK(residual(1000) <= 0.35 * residual(500) + 1e-12);
}

TEST_CASE("characteristic function of the Dirichlet problem") {
  SUBCASE("free equation, zero lambda") {
    SLBase base = base_for("zero", 400, 10);
    CHECK(std::abs(dirichlet_char(base, 0.0, 0.0, 1.0) - Complex(1.0)) <=
          1e-14);
    CHECK(std::abs(dirichlet_char(base, 0.0, -0.5, 0.75) - Complex(1.25)) <=
          1e-14);
  }
  SUBCASE("conjugate lambda gives the conjugate value") {
    SLBase base = base_for("const:1", 500, 26);
    const Complex a = dirichlet_char(base, Complex(-3.0, 2.0), 0.0, 1.0);
    const Complex b = dirichlet_char(base, Complex(-3.0, -2.0), 0.0, 1.0);
    CHECK(std::abs(a - std::conj(b)) <= 1e-13 * std::max(1.0, std::abs(a)));
  }
  SUBCASE("root near -pi^2 for the free equation") {
    SLBase base = base_for("zero", 8000, 40);
    EigenvalueScan scan{-12.0, -8.0, 40, 1e-10};
    auto roots = find_eigenvalues(base, 0.0, 1.0, scan, 1);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0].real() + kPi * kPi) <= 1e-6);
  }
  SUBCASE("unit potential shifts the spectrum down by one") {
    // v'' - v = lambda v on [0,1] is the free problem in lambda + 1, so
    // the m-th Dirichlet eigenvalue sits at -1 - (m pi)^2
    SLBase base = base_for("const:1", 8000, 40);
    EigenvalueScan scan{-13.0, -9.0, 40, 1e-10};
    auto roots = find_eigenvalues(base, 0.0, 1.0, scan, 1);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0].real() - (-1.0 - kPi * kPi)) <= 1e-5);
  }
}

TEST_CASE("eigenvalue search") {
  SUBCASE("first two free eigenvalues") {
    SLBase base = base_for("zero", 8000, 60);
    EigenvalueScan scan{-50.0, -1.0, 200, 1e-9};
    auto roots = find_eigenvalues(base, 0.0, 1.0, scan, 5);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0].real() + 4.0 * kPi * kPi) <= 1e-5);
    CHECK(std::abs(roots[1].real() + kPi * kPi) <= 1e-5);
  }
  SUBCASE("window with no roots comes back empty") {
    // positive lambda up to 30 keeps ~16 series terms alive
    SLBase base = base_for("zero", 400, 40);
    EigenvalueScan scan{2.0, 30.0, 50, 1e-8};
    CHECK(find_eigenvalues(base, 0.0, 1.0, scan, 3).empty());
  }
  SUBCASE("step potential against the shooting oracle") {
    SLBase base = base_for("step:1:0", 8000, 60);
    EigenvalueScan scan{-50.0, -1.0, 200, 1e-9};
    auto roots = find_eigenvalues(base, 0.0, 1.0, scan, 5);
    REQUIRE(roots.size() == 2);
    auto oracle_roots = oracle::shooting_eigenvalues(
        [](double x) { return x > 0.0 ? 1.0 : 0.0; }, 0.0, 1.0, -50.0, -1.0,
        5);
    REQUIRE(oracle_roots.size() == 2);
    CHECK(std::abs(roots[0].real() - oracle_roots[0]) <= 1e-4);
    CHECK(std::abs(roots[1].real() - oracle_roots[1]) <= 1e-4);
  }
  SUBCASE("degenerate scan windows are rejected") {
    SLBase base = base_for("zero", 400, 10);
    CHECK_THROWS_AS(
        find_eigenvalues(base, 0.0, 1.0, {5.0, -5.0, 100, 1e-8}, 1),
        std::invalid_argument);
  }
}

TEST_CASE("running out of members raises a truncation error") {
  SLBase base = base_for("const:1", 400, 6);
  CHECK_THROWS_AS(spps_solve(base, 60.0), TruncationError);
  CHECK_THROWS_AS(dirichlet_char(base, 60.0, 0.0, 1.0), TruncationError);
  try {
    spps_solve(base, 60.0);
  } catch (const TruncationError& e) {
    CHECK(e.tail_bound() > 0.0);
  }
}

TEST_CASE("degenerate base pair is rejected") {
  Grid g(1.0, 200);
  SampledFunction q(g);
  BaseSolutionPair p = canonical_pair(q);
  SLBase bad{{p.phi0, p.phi0, {1.0, 0.0, 1.0, 0.0}, Complex(0.0)},
             {p.phi0, p.phi0}};
  CHECK_THROWS_AS(spps_solve(bad, 1.0), DegenerateBasisError);
}

}  // TEST_SUITE
