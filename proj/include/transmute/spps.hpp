#pragma once

#include <vector>

#include "transmute/lbase.hpp"

namespace transmute {

// Power series in the spectral parameter built over a recursive base:
//   v1 = sum_k lambda^k phi_{2k} / (2k)!,
//   v2 = sum_k lambda^k phi_{2k+1} / (2k+1)!.
// Both solve v'' - q v = lambda v; v1 carries the data of phi0 at 0 and
// v2 that of phi1.
struct SPPSSolution {
  Complex lambda;
  int k_used;            // highest series index included
  double tail_estimate;  // sup-norm of the last included term
  SampledFunction v1;
  SampledFunction v2;
};

// Truncates when the latest term of each series drops below tol relative
// to the running partial-sum sup-norm; throws TruncationError (carrying
// the last term norm) when the base is exhausted first.
SPPSSolution spps_solve(const SLBase& base, Complex lambda,
                        double tol = 1e-12);

// c1 v1 + c2 v2.
SampledFunction general_solution(const SLBase& base, Complex lambda,
                                 Complex c1, Complex c2, double tol = 1e-12);

// v1(left) v2(right) - v1(right) v2(left); zero exactly when the problem
//   v'' - q v = lambda v, v(left) = v(right) = 0
// has a nontrivial solution.  left/right snap to the nearest grid nodes.
Complex dirichlet_char(const SLBase& base, Complex lambda, double left,
                       double right);

struct EigenvalueScan {
  double lambda_min;
  double lambda_max;
  int samples = 200;   // uniform characteristic samples across the window
  double tol = 1e-8;   // bisection interval target
};

// Real eigenvalues of the Dirichlet problem on [left, right] located by
// sign changes of Re(dirichlet_char) and refined by bisection; at most
// `count` of them, in ascending order.
std::vector<Complex> find_eigenvalues(const SLBase& base, double left,
                                      double right, const EigenvalueScan& scan,
                                      int count);

}  // namespace transmute
