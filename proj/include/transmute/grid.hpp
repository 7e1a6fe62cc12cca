#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "transmute/errors.hpp"

namespace transmute {

using Complex = std::complex<double>;

// Uniform symmetric grid x_i = -a + i*h on [-a, a], h = 2a/n.  n is kept
// even so that x = 0 is always a node: every oriented integral in this
// library is anchored at 0, and the parity projectors need the mirror
// i <-> n-i to be exact.
class Grid {
 public:
  Grid(double half_width, int subintervals);

  double half_width() const { return a_; }
  int subintervals() const { return n_; }
  int size() const { return n_ + 1; }
  int center() const { return n_ / 2; }
  double step() const { return h_; }
  // centered form: node(center) is exactly 0 and mirrored nodes are exact
  // bitwise negatives, which the parity projectors and oriented integrals
  // rely on
  double node(int i) const { return h_ * (i - n_ / 2); }
  int mirror(int i) const { return n_ - i; }

  // Nearest node index for a point inside [-a - h/2, a + h/2]; throws
  // GridMismatchError outside that slack.
  int nearest_node(double x) const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double a_;
  int n_;
  double h_;
};

void require_same_grid(const Grid& g1, const Grid& g2);

// Complex node values on a Grid.  Value semantics; arithmetic is node-wise.
class SampledFunction {
 public:
  explicit SampledFunction(const Grid& grid)
      : grid_(grid), values_(grid.size(), Complex(0.0)) {}
  SampledFunction(const Grid& grid, std::vector<Complex> values);

  template <class F>
  static SampledFunction sample(const Grid& grid, F&& f) {
    SampledFunction out(grid);
    for (int i = 0; i < grid.size(); ++i) out.values_[i] = f(grid.node(i));
    return out;
  }

  const Grid& grid() const { return grid_; }
  int size() const { return grid_.size(); }
  std::span<const Complex> values() const { return values_; }
  Complex& operator[](int i) { return values_[i]; }
  const Complex& operator[](int i) const { return values_[i]; }

  // Value at the x = 0 node.
  Complex at_zero() const { return values_[grid_.center()]; }

  double sup_norm() const;

  SampledFunction& operator+=(const SampledFunction& o);
  SampledFunction& operator-=(const SampledFunction& o);
  SampledFunction& operator*=(Complex c);

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

SampledFunction operator+(SampledFunction lhs, const SampledFunction& rhs);
SampledFunction operator-(SampledFunction lhs, const SampledFunction& rhs);
SampledFunction operator*(Complex c, SampledFunction f);

// Oriented antiderivative F(x_i) = integral from 0 to x_i of f, composite
// trapezoid accumulated outward from the 0 node, so F(0) = 0 exactly and
// F is negative-oriented left of 0.
SampledFunction cumulative_integral(const SampledFunction& f);

// Composite trapezoid of |f| over [-a, a].
double l1_norm(const SampledFunction& f);

// Trapezoid of f itself (signed), over the whole interval.
Complex integral(const SampledFunction& f);

// Piecewise-linear interpolation; exact at the nodes.  Accepts x within
// [-a - h/2, a + h/2] (clamped to the end nodes); beyond that throws.
Complex interp_linear(const SampledFunction& f, double x);

// First derivative: central differences inside, second-order one-sided
// stencils at the two end nodes.
SampledFunction derivative(const SampledFunction& f);

// Second difference: (f[i-1] - 2 f[i] + f[i+1]) / h^2 inside, the
// second-order four-point one-sided stencil at the end nodes.
SampledFunction second_difference(const SampledFunction& f);

}  // namespace transmute
