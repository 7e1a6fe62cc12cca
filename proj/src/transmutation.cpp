#include "transmute/transmutation.hpp"

#include <algorithm>
#include <cmath>

#include "transmute/errors.hpp"

namespace transmute {

SampledFunction project_even(const SampledFunction& u) {
  const Grid& g = u.grid();
  SampledFunction out(g);
  for (int i = 0; i < g.size(); ++i)
    out[i] = 0.5 * (u[i] + u[g.mirror(i)]);
  return out;
}

SampledFunction project_odd(const SampledFunction& u) {
  const Grid& g = u.grid();
  SampledFunction out(g);
  for (int i = 0; i < g.size(); ++i)
    out[i] = 0.5 * (u[i] - u[g.mirror(i)]);
  return out;
}

namespace {

// Trapezoid over the node range [p, r] of w(j); empty when p == r.
template <class F>
Complex range_sum(int p, int r, double h, F&& w) {
  if (p >= r) return Complex(0.0);
  Complex acc = 0.5 * (w(p) + w(r));
  for (int j = p + 1; j < r; ++j) acc += w(j);
  return h * acc;
}

}  // namespace

SampledFunction apply_transmutation(const GoursatKernel& k,
                                    const SampledFunction& u) {
  require_same_grid(k.grid(), u.grid());
  const Grid& g = u.grid();
  const int n = g.subintervals();
  const int c = g.center();
  const double h = g.step();
  SampledFunction out = u;
  for (int i = 0; i <= n; ++i) {
    const int lo = std::min(i, n - i);
    const int hi = std::max(i, n - i);
    const Complex acc =
        range_sum(lo, hi, h, [&](int j) { return k.k_node(i, j) * u[j]; });
    out[i] += (i >= c ? acc : -acc);
  }
  return out;
}

SampledFunction apply_inverse(const GoursatKernel& k,
                              const SampledFunction& u) {
  require_same_grid(k.grid(), u.grid());
  const Grid& g = u.grid();
  const int n = g.subintervals();
  const int c = g.center();
  const double h = g.step();
  SampledFunction out = u;
  for (int i = 0; i <= n; ++i) {
    const int lo = std::min(i, n - i);
    const int hi = std::max(i, n - i);
    const Complex acc =
        range_sum(lo, hi, h, [&](int j) { return k.k_node(j, i) * u[j]; });
    out[i] -= (i >= c ? acc : -acc);
  }
  return out;
}

SampledFunction apply_transpose(const GoursatKernel& k,
                                const SampledFunction& psi) {
  require_same_grid(k.grid(), psi.grid());
  const Grid& g = psi.grid();
  const int n = g.subintervals();
  const double h = g.step();
  for (int i : {0, 1, n - 1, n})
    if (std::abs(psi[i]) >= 1e-14)
      throw std::domain_error(
          "transpose requires compact support: psi must vanish at the outer "
          "two nodes on each side");
  SampledFunction out = psi;
  for (int i = 0; i <= n; ++i) {
    const int lo = std::min(i, n - i);
    const int hi = std::max(i, n - i);
    out[i] -= range_sum(0, lo, h,
                        [&](int j) { return k.k_node(j, i) * psi[j]; });
    out[i] += range_sum(hi, n, h,
                        [&](int j) { return k.k_node(j, i) * psi[j]; });
  }
  return out;
}

SampledFunction fundamental_apply(Fundamental which, const GoursatKernel& k,
                                  const SampledFunction& u) {
  switch (which) {
    case Fundamental::EvenPart:
      return apply_transmutation(k, project_even(u));
    case Fundamental::OddPart:
      return apply_transmutation(k, project_odd(u));
    case Fundamental::AntiderivativeOfEven:
      return apply_transmutation(k, cumulative_integral(project_even(u)));
    case Fundamental::DerivativeOfOdd:
      return apply_transmutation(k, derivative(project_odd(u)));
  }
  throw std::invalid_argument("unknown fundamental operator");
}

SampledFunction general_apply(const TransmutationSpec& spec,
                              const GoursatKernel& k,
                              const SampledFunction& u) {
  // combine the four pre-images first; T is linear, so one kernel pass does
  const SampledFunction even = project_even(u);
  const SampledFunction odd = project_odd(u);
  SampledFunction pre = spec.c_plus * even;
  pre += spec.c_a * cumulative_integral(even);
  pre += spec.c_d * derivative(odd);
  pre += spec.c_minus * odd;
  return apply_transmutation(k, pre);
}

namespace {

void require_invertible(const TransmutationSpec& spec) {
  const double scale =
      std::max({1.0, std::abs(spec.c_plus * spec.c_minus),
                std::abs(spec.c_a * spec.c_d)});
  if (std::abs(spec.determinant()) <= 1e-12 * scale)
    throw DegenerateBasisError(
        "transmutation coefficients have vanishing determinant");
}

}  // namespace

SampledFunction general_inverse_apply(const TransmutationSpec& spec,
                                      const GoursatKernel& k,
                                      const SampledFunction& u) {
  require_invertible(spec);
  const SampledFunction v = apply_inverse(k, u);
  const SampledFunction even = project_even(v);
  const SampledFunction odd = project_odd(v);
  SampledFunction out = spec.c_minus * even;
  out -= spec.c_a * cumulative_integral(even);
  out -= spec.c_d * derivative(odd);
  out += spec.c_plus * odd;
  out *= 1.0 / spec.determinant();
  return out;
}

TransmutationSpec relate_bases(const BaseSolutionPair& phi,
                               const BaseSolutionPair& psi) {
  require_same_grid(phi.phi0.grid(), psi.phi0.grid());
  const Grid& g = phi.phi0.grid();

  const double scale_psi =
      std::max(1.0, psi.phi0.sup_norm() * psi.phi1.sup_norm());
  if (std::abs(psi.wronskian) <= 1e-12 * scale_psi)
    throw DegenerateBasisError("target pair has vanishing Wronskian");

  const SampledFunction dphi0 = derivative(phi.phi0);
  const SampledFunction dphi1 = derivative(phi.phi1);
  const SampledFunction dpsi0 = derivative(psi.phi0);
  const SampledFunction dpsi1 = derivative(psi.phi1);

  // cross-Wronskian field of (f, g); constant in x when both pairs solve
  // the same equation
  auto cross = [&](const SampledFunction& f, const SampledFunction& df,
                   const SampledFunction& gg, const SampledFunction& dg) {
    SampledFunction w(g);
    for (int i = 0; i < g.size(); ++i) w[i] = f[i] * dg[i] - df[i] * gg[i];
    return w;
  };

  const SampledFunction w01 = cross(phi.phi0, dphi0, psi.phi1, dpsi1);
  const SampledFunction w00 = cross(phi.phi0, dphi0, psi.phi0, dpsi0);
  const SampledFunction w11 = cross(phi.phi1, dphi1, psi.phi1, dpsi1);
  const SampledFunction w10 = cross(phi.phi1, dphi1, psi.phi0, dpsi0);

  // reject pairs that do not share a potential: their cross-Wronskians
  // drift by O(1) instead of the O(h^2) differentiation noise
  double drift = 0.0;
  double scale = 1.0;
  for (const SampledFunction* w : {&w01, &w00, &w11, &w10}) {
    for (int i = 0; i < g.size(); ++i)
      drift = std::max(drift, std::abs((*w)[i] - w->at_zero()));
    scale = std::max(scale, w->sup_norm());
  }
  if (drift > 1e-2 * scale)
    throw std::domain_error(
        "cross-Wronskians are not constant: the pairs do not solve the same "
        "equation");

  const Complex w_psi = psi.wronskian;
  return {w01.at_zero() / w_psi, -w00.at_zero() / w_psi,
          w11.at_zero() / w_psi, -w10.at_zero() / w_psi};
}

}  // namespace transmute
