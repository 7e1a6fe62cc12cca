#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

struct State {
  Complex v, vp;
};

// One RK4 step of the first-order system (v, v')' = (v', w(x) v).
State rk4_step(const ScalarField& w, double x, State s, double dh) {
  auto f = [&](double xx, State st) -> State {
    return {st.vp, Complex(w(xx)) * st.v};
  };
  State k1 = f(x, s);
  State k2 = f(x + 0.5 * dh, {s.v + 0.5 * dh * k1.v, s.vp + 0.5 * dh * k1.vp});
  State k3 = f(x + 0.5 * dh, {s.v + 0.5 * dh * k2.v, s.vp + 0.5 * dh * k2.vp});
  State k4 = f(x + dh, {s.v + dh * k3.v, s.vp + dh * k3.vp});
  return {s.v + dh / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v),
          s.vp + dh / 6.0 * (k1.vp + 2.0 * k2.vp + 2.0 * k3.vp + k4.vp)};
}

}  // namespace

SampledFunction rk4_ivp(const Grid& g, const ScalarField& w, Complex v0,
                        Complex v0p, int substeps) {
  SampledFunction out(g);
  const int c = g.center();
  out[c] = v0;
  State s{v0, v0p};
  for (int i = c; i < g.subintervals(); ++i) {
    const double dh = g.step() / substeps;
    for (int k = 0; k < substeps; ++k)
      s = rk4_step(w, g.node(i) + k * dh, s, dh);
    out[i + 1] = s.v;
  }
  s = {v0, v0p};
  for (int i = c; i > 0; --i) {
    const double dh = -g.step() / substeps;
    for (int k = 0; k < substeps; ++k)
      s = rk4_step(w, g.node(i) + k * dh, s, dh);
    out[i - 1] = s.v;
  }
  return out;
}

double shoot_characteristic(const ScalarField& q, double lambda, double left,
                            double right, int steps) {
  auto w = [&](double x) { return q(x) + lambda; };
  State s{Complex(0.0), Complex(1.0)};
  const double dh = (right - left) / steps;
  for (int k = 0; k < steps; ++k)
    s = rk4_step(w, left + k * dh, s, dh);
  return s.v.real();
}

std::vector<double> shooting_eigenvalues(const ScalarField& q, double left,
                                         double right, double lambda_min,
                                         double lambda_max, int count,
                                         int samples) {
  std::vector<double> roots;
  double prev_lam = lambda_min;
  double prev = shoot_characteristic(q, prev_lam, left, right);
  for (int s = 1; s < samples && static_cast<int>(roots.size()) < count; ++s) {
    const double lam =
        lambda_min + (lambda_max - lambda_min) * s / (samples - 1);
    const double val = shoot_characteristic(q, lam, left, right);
    if (std::signbit(val) != std::signbit(prev)) {
      double lo = prev_lam, hi = lam, flo = prev;
      for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = shoot_characteristic(q, mid, left, right);
        if (std::signbit(fmid) == std::signbit(flo)) {
          lo = mid;
          flo = fmid;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_lam = lam;
    prev = val;
  }
  return roots;
}

Complex h_series_direct(const ScalarField& q, double u, double v, int steps_u,
                        int steps_v, int terms) {
  if (!(u > 0.0 && v > 0.0))
    throw std::invalid_argument("direct series oracle needs u, v > 0");
  const int mu = steps_u + 1, mv = steps_v + 1;
  const double du = u / steps_u, dv = v / steps_v;
  auto id = [mv](int i, int j) { return i * mv + j; };

  // current term, starting from H_0 = 1/2 Int_0^alpha q (column-constant)
  std::vector<Complex> term(mu * mv);
  double acc = 0.0;
  for (int i = 0; i < mu; ++i) {
    if (i > 0) acc += 0.5 * du * (q((i - 1) * du) + q(i * du));
    for (int j = 0; j < mv; ++j) term[id(i, j)] = 0.5 * acc;
  }
  Complex total = term[id(mu - 1, mv - 1)];

  std::vector<Complex> g(mu * mv), next(mu * mv);
  for (int k = 1; k < terms; ++k) {
    for (int i = 0; i < mu; ++i)
      for (int j = 0; j < mv; ++j)
        g[id(i, j)] = q(i * du + j * dv) * term[id(i, j)];
    // next(i,j) = Int_0^{alpha_i} Int_0^{beta_j} g, trapezoid both ways
    for (int i = 0; i < mu; ++i) {
      Complex row(0.0);
      next[id(i, 0)] = Complex(0.0);
      for (int j = 1; j < mv; ++j) {
        row += 0.5 * dv * (g[id(i, j - 1)] + g[id(i, j)]);
        next[id(i, j)] = row;
      }
    }
    for (int j = 0; j < mv; ++j) {
      Complex col(0.0);
      Complex prev = next[id(0, j)];
      next[id(0, j)] = Complex(0.0);
      for (int i = 1; i < mu; ++i) {
        const Complex cur = next[id(i, j)];
        col += 0.5 * du * (prev + cur);
        prev = cur;
        next[id(i, j)] = col;
      }
    }
    term.swap(next);
    const Complex last = term[id(mu - 1, mv - 1)];
    total += last;
    if (std::abs(last) < 1e-15) break;
  }
  return total;
}

std::vector<SampledFunction> slbase_direct(
    const transmute::BaseSolutionPair& pair, int k_max) {
  const Grid& g = pair.phi0.grid();
  const int c = g.center();
  const double h = g.step();
  std::vector<SampledFunction> members{pair.phi0, pair.phi1};
  for (int k = 2; k <= k_max; ++k) {
    const SampledFunction& prev = members[k - 2];
    SampledFunction cur(g);
    for (int i = 0; i < g.size(); ++i) {
      // oriented trapezoid of G(x_i, s) prev(s) over s in [0, x_i]
      const int lo = std::min(c, i), hi = std::max(c, i);
      Complex sum(0.0);
      for (int j = lo; j < hi; ++j) {
        auto green = [&](int jj) {
          return (pair.phi0[jj] * pair.phi1[i] - pair.phi0[i] * pair.phi1[jj]) /
                 pair.wronskian;
        };
        sum += 0.5 * h * (green(j) * prev[j] + green(j + 1) * prev[j + 1]);
      }
      if (i < c) sum = -sum;
      cur[i] = static_cast<double>(k * (k - 1)) * sum;
    }
    members.push_back(std::move(cur));
  }
  return members;
}

double poly_bump(double x, double c, double b) {
  const double s = (x - c) / b;
  if (std::abs(s) >= 1.0) return 0.0;
  const double w = 1.0 - s * s;
  return w * w * w;
}

double smoothed_step(double x, double value, double w) {
  if (x <= -0.5 * w) return 0.0;
  if (x >= 0.5 * w) return value;
  const double t = (x + 0.5 * w) / w;
  return value * t * t * (3.0 - 2.0 * t);
}

}  // namespace oracle
