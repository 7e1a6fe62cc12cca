#pragma once

#include <array>
#include <span>
#include <vector>

#include "transmute/grid.hpp"

namespace transmute {

struct PicardOptions {
  double tol = 1e-12;  // sup-norm fixed-point tolerance
  int max_sweeps = 60;
};

// Solution of u'' = q u with u(0) = u0, u'(0) = u0p, computed by Picard
// iteration on u(x) = u0 + u0p x + Int_0^x (x - s) q(s) u(s) ds.  Throws
// TruncationError when max_sweeps is hit first (does not happen for
// integrable q on a bounded interval unless max_sweeps is set very low).
SampledFunction solve_base_solution(const SampledFunction& q, Complex u0,
                                    Complex u0p,
                                    const PicardOptions& opts = {});

// Two solutions of u'' = q u together with their initial data
// (phi0(0), phi0'(0), phi1(0), phi1'(0)) and the Wronskian
// phi0 phi1' - phi0' phi1, which the shared equation keeps constant; it is
// evaluated from the initial data, hence exact.
struct BaseSolutionPair {
  SampledFunction phi0;
  SampledFunction phi1;
  std::array<Complex, 4> init_data;
  Complex wronskian;
};

BaseSolutionPair make_base_pair(const SampledFunction& q, Complex a0,
                                Complex a0p, Complex b0, Complex b0p,
                                const PicardOptions& opts = {});

// The pair with initial data (1, 0) and (0, 1); Wronskian 1 exactly.
BaseSolutionPair canonical_pair(const SampledFunction& q,
                                const PicardOptions& opts = {});

// Green function G(x, s) = [phi0(s) phi1(x) - phi0(x) phi1(s)] / W of the
// initial-value problem for u'' - q u.  Throws DegenerateBasisError when
// |W| <= 1e-12 relative to the pair's scale.
Complex green_function(const BaseSolutionPair& pair, double x, double s);

// Recursive family phi_k anchored on a solution pair:
//   phi_0 = phi0, phi_1 = phi1,
//   phi_k(x) = k (k-1) Int_0^x G(x, s) phi_{k-2}(s) ds,
// evaluated in the factorized O(n)-per-member form
//   phi_k = k(k-1)/W [ phi1 * Int_0^x phi0 phi_{k-2} - phi0 * Int_0^x phi1 phi_{k-2} ].
// For q = 0 and the canonical pair this reproduces the powers x^k.
struct SLBase {
  BaseSolutionPair pair;
  std::vector<SampledFunction> members;  // indices 0 .. k_max
};

SLBase build_slbase(const BaseSolutionPair& pair, int k_max);

// Least-squares polynomial model of u: fits u'' (finite differences) by a
// polynomial of degree `degree` - 2, integrates twice from the supplied
// initial data, and returns the monomial coefficients c0 .. c_degree.
// Recovers polynomials of degree <= `degree` exactly up to quadrature
// noise.
std::vector<Complex> polynomial_approx(const SampledFunction& u, Complex u0,
                                       Complex u0p, int degree);

Complex polynomial_eval(std::span<const Complex> coeffs, double x);

}  // namespace transmute
