#pragma once

#include "transmute/grid.hpp"
#include "transmute/kernel.hpp"
#include "transmute/lbase.hpp"

namespace transmute {

// Parity projectors (P u)(x) = (u(x) +/- u(-x)) / 2; exact node mirroring.
SampledFunction project_even(const SampledFunction& u);
SampledFunction project_odd(const SampledFunction& u);

// T u = u(x) + Int_{-x}^{x} K(x, t) u(t) dt  (oriented integral).
// Maps solutions of v'' = mu v to solutions of v'' - q v = mu v with the
// same data at 0.
SampledFunction apply_transmutation(const GoursatKernel& k,
                                    const SampledFunction& u);

// T^{-1} u = u(x) - Int_{-x}^{x} K(t, x) u(t) dt, the exact Volterra
// inverse of the continuum operator (discretely: inverse up to quadrature).
SampledFunction apply_inverse(const GoursatKernel& k,
                              const SampledFunction& u);

// Transpose with respect to Int u v dx on [-a, a]:
// T' psi = psi(x) - Int_{-a}^{-|x|} K(t, x) psi(t) dt
//                 + Int_{|x|}^{a}  K(t, x) psi(t) dt.
// Requires psi to vanish at the outer two nodes on each side.
SampledFunction apply_transpose(const GoursatKernel& k,
                                const SampledFunction& psi);

// The four operators every transmutation for the same q decomposes over.
enum class Fundamental {
  EvenPart,             // T P+
  OddPart,              // T P-
  AntiderivativeOfEven, // T A P+,  A u = Int_0^x u
  DerivativeOfOdd,      // T d/dx P-
};

SampledFunction fundamental_apply(Fundamental which, const GoursatKernel& k,
                                  const SampledFunction& u);

// Coefficient quadruple selecting a member of the fundamental family:
//   T_c = c_plus T P+ + c_a T A P+ + c_d T d/dx P- + c_minus T P-.
// For the operator sending 1, x to a solution pair phi0, phi1 the
// coefficients are that pair's initial data.
struct TransmutationSpec {
  Complex c_plus{1.0};
  Complex c_a{0.0};
  Complex c_d{0.0};
  Complex c_minus{1.0};

  Complex determinant() const { return c_plus * c_minus - c_a * c_d; }
  static TransmutationSpec from_pair(const BaseSolutionPair& pair) {
    return {pair.init_data[0], pair.init_data[1], pair.init_data[2],
            pair.init_data[3]};
  }
};

SampledFunction general_apply(const TransmutationSpec& spec,
                              const GoursatKernel& k,
                              const SampledFunction& u);

// Inverse of general_apply:
//   (1/det) [ c_minus P+ - c_a A P+ - c_d d/dx P- + c_plus P- ] T^{-1} u.
// Throws DegenerateBasisError when the determinant vanishes.
SampledFunction general_inverse_apply(const TransmutationSpec& spec,
                                      const GoursatKernel& k,
                                      const SampledFunction& u);

// Coefficients expressing the operator that sends the pair psi to the pair
// phi, via cross-Wronskians at 0 (each is constant in x when both pairs
// solve the same equation; a large drift means they do not and is
// rejected).
TransmutationSpec relate_bases(const BaseSolutionPair& phi,
                               const BaseSolutionPair& psi);

}  // namespace transmute
