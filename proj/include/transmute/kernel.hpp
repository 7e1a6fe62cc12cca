#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include "transmute/grid.hpp"

namespace transmute {

struct KernelBuildOptions {
  double tol = 1e-12;  // sup-norm target for the series tail
  int n_max = 60;      // cap on the number of series terms
};

// Goursat-form integral kernel K(x, t) = H((x+t)/2, (x-t)/2) of the
// transmutation operator for d^2/dx^2 - q(x) on [-a, a].  H solves
//   H(u, v) = 1/2 Int_0^u q  +  Int_0^u Int_0^v q(alpha+beta) H(alpha,beta)
// on the rotated square |u| + |v| <= a and is computed by successive
// approximations; each term is integrated with the same outward-anchored
// trapezoid rule the rest of the library uses.
//
// Both H on its (u, v) grid and K on the (x, t) grid are tabulated at
// construction; instances are immutable afterwards.
class GoursatKernel {
 public:
  static GoursatKernel build(const SampledFunction& q,
                             const KernelBuildOptions& opts = {});

  const Grid& grid() const { return grid_; }

  // True when the series tail bound reached tol before n_max terms.
  bool converged() const { return converged_; }
  int iterations() const { return iterations_; }
  double tail_bound() const { return tail_bound_; }
  double q_l1() const { return q_l1_; }

  // sup-norm of each computed series term, and the factorial a-priori
  // bound ||q||_1 (a ||q||_1)^m / m! it must respect.
  const std::vector<std::pair<double, double>>& term_history() const {
    return term_history_;
  }

  // Support test for a (u, v) grid node: |u| + |v| <= a.
  bool inside(int iu, int iv) const {
    const int c = grid_.center();
    return std::abs(iu - c) + std::abs(iv - c) <= c;
  }

  Complex h_node(int iu, int iv) const { return h_[idx(iu, iv)]; }

  // H at an arbitrary point of |u| + |v| <= a: bilinear on the cell, or
  // linear on the half-cell triangle when the cell straddles the support
  // boundary (the corner beyond it carries no data).
  Complex h_value(double u, double v) const;

  // K at a pair of grid nodes (tabulated once at construction).
  Complex k_node(int ix, int it) const { return k_xt_[idx(ix, it)]; }

  // K(x, t) for |t| <= |x| <= a, each up to h/2 rounding slack; outside
  // that triangle the kernel is not defined and this throws.
  Complex kernel_at(double x, double t) const;

  // max |H| over the support nodes.
  double sup_h() const { return sup_h_; }

 private:
  GoursatKernel(const Grid& g) : grid_(g) {}
  int idx(int i, int j) const { return i * grid_.size() + j; }

  Grid grid_;
  std::vector<Complex> h_;     // H on the (u, v) grid, zero off support
  std::vector<Complex> k_xt_;  // K on the (x, t) grid
  bool converged_ = false;
  int iterations_ = 0;
  double tail_bound_ = 0.0;
  double q_l1_ = 0.0;
  double sup_h_ = 0.0;
  std::vector<std::pair<double, double>> term_history_;
};

// Like GoursatKernel::build but refuses an unconverged series: throws
// TruncationError carrying the factorial tail bound when n_max terms were
// not enough.  Use the static build() to inspect a partial kernel instead.
GoursatKernel build_kernel(const SampledFunction& q,
                           const KernelBuildOptions& opts = {});

// max |H_1 - H_2| over the common support nodes; grids must match.
double kernel_distance(const GoursatKernel& k1, const GoursatKernel& k2);

struct GoursatResiduals {
  double diagonal;      // max_i |K(x_i, x_i) - 1/2 Int_0^{x_i} q|
  double antidiagonal;  // max_i |K(x_i, -x_i)|
};

// Checks the two characteristic boundary traces of K against the grid
// antiderivative of q.
GoursatResiduals verify_goursat_bc(const GoursatKernel& k,
                                   const SampledFunction& q);

// Tests the kernel PDE K_xx - K_tt - q(x) K = 0 in weak form against a
// family of smooth compactly supported bumps; returns the largest residual
// normalized by the W^{1,1} norm of the test function.  Kernel derivatives
// are finite differences on the (x, t) tabulation.
double verify_weak_goursat(const GoursatKernel& k, const SampledFunction& q,
                           int family_size);

}  // namespace transmute
