#include "transmute/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace transmute {

Grid::Grid(double half_width, int subintervals)
    : a_(half_width), n_(subintervals) {
  if (!(a_ > 0.0) || !std::isfinite(a_))
    throw std::invalid_argument("grid half_width must be positive and finite");
  if (n_ < 2 || n_ % 2 != 0)
    throw std::invalid_argument("grid subinterval count must be even and >= 2");
  h_ = 2.0 * a_ / n_;
}

int Grid::nearest_node(double x) const {
  double fi = (x + a_) / h_;
  int i = static_cast<int>(std::lround(fi));
  i = std::clamp(i, 0, n_);
  if (std::abs(x - node(i)) > 0.5 * h_ * (1.0 + 1e-9))
    throw GridMismatchError("point " + std::to_string(x) +
                            " lies outside the grid interval");
  return i;
}

void require_same_grid(const Grid& g1, const Grid& g2) {
  if (!(g1 == g2))
    throw GridMismatchError("operands live on different grids");
}

SampledFunction::SampledFunction(const Grid& grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.size())
    throw std::invalid_argument("value count does not match grid size");
}

double SampledFunction::sup_norm() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

SampledFunction& SampledFunction::operator+=(const SampledFunction& o) {
  require_same_grid(grid_, o.grid_);
  for (int i = 0; i < size(); ++i) values_[i] += o.values_[i];
  return *this;
}

SampledFunction& SampledFunction::operator-=(const SampledFunction& o) {
  require_same_grid(grid_, o.grid_);
  for (int i = 0; i < size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

SampledFunction& SampledFunction::operator*=(Complex c) {
  for (Complex& v : values_) v *= c;
  return *this;
}

SampledFunction operator+(SampledFunction lhs, const SampledFunction& rhs) {
  lhs += rhs;
  return lhs;
}

SampledFunction operator-(SampledFunction lhs, const SampledFunction& rhs) {
  lhs -= rhs;
  return lhs;
}

SampledFunction operator*(Complex c, SampledFunction f) {
  f *= c;
  return f;
}

SampledFunction cumulative_integral(const SampledFunction& f) {
  const Grid& g = f.grid();
  const int c = g.center();
  const double h = g.step();
  SampledFunction out(g);
  out[c] = Complex(0.0);
  for (int i = c + 1; i <= g.subintervals(); ++i)
    out[i] = out[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
  for (int i = c - 1; i >= 0; --i)
    out[i] = out[i + 1] - 0.5 * h * (f[i] + f[i + 1]);
  return out;
}

double l1_norm(const SampledFunction& f) {
  const Grid& g = f.grid();
  const double h = g.step();
  double s = 0.5 * (std::abs(f[0]) + std::abs(f[g.subintervals()]));
  for (int i = 1; i < g.subintervals(); ++i) s += std::abs(f[i]);
  return h * s;
}

Complex integral(const SampledFunction& f) {
  const Grid& g = f.grid();
  const double h = g.step();
  Complex s = 0.5 * (f[0] + f[g.subintervals()]);
  for (int i = 1; i < g.subintervals(); ++i) s += f[i];
  return h * s;
}

Complex interp_linear(const SampledFunction& f, double x) {
  const Grid& g = f.grid();
  const double a = g.half_width();
  const double h = g.step();
  if (x < -a - 0.5 * h || x > a + 0.5 * h)
    throw GridMismatchError("interpolation point outside [-a, a]");
  if (x <= -a) return f[0];
  if (x >= a) return f[g.subintervals()];
  double fi = (x + a) / h;
  int i = std::min(static_cast<int>(std::floor(fi)), g.subintervals() - 1);
  double t = fi - i;
  return (1.0 - t) * f[i] + t * f[i + 1];
}

SampledFunction derivative(const SampledFunction& f) {
  const Grid& g = f.grid();
  const int n = g.subintervals();
  const double h = g.step();
  SampledFunction out(g);
  out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (int i = 1; i < n; ++i) out[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  out[n] = (3.0 * f[n] - 4.0 * f[n - 1] + f[n - 2]) / (2.0 * h);
  return out;
}

SampledFunction second_difference(const SampledFunction& f) {
  const Grid& g = f.grid();
  const int n = g.subintervals();
  const double h2 = g.step() * g.step();
  SampledFunction out(g);
  out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
  for (int i = 1; i < n; ++i) out[i] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) / h2;
  out[n] = (2.0 * f[n] - 5.0 * f[n - 1] + 4.0 * f[n - 2] - f[n - 3]) / h2;
  return out;
}

}  // namespace transmute
