#include "transmute/lbase.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "transmute/errors.hpp"

namespace transmute {

namespace {

SampledFunction pointwise(const SampledFunction& f, const SampledFunction& g) {
  require_same_grid(f.grid(), g.grid());
  SampledFunction out(f.grid());
  for (int i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
  return out;
}

void require_nondegenerate(const BaseSolutionPair& pair) {
  const double scale =
      std::max(1.0, pair.phi0.sup_norm() * pair.phi1.sup_norm());
  if (std::abs(pair.wronskian) <= 1e-12 * scale)
    throw DegenerateBasisError("solution pair has vanishing Wronskian");
}

}  // namespace

SampledFunction solve_base_solution(const SampledFunction& q, Complex u0,
                                    Complex u0p, const PicardOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("picard tol must be > 0");
  if (opts.max_sweeps < 1)
    throw std::invalid_argument("picard max_sweeps must be >= 1");

  const Grid& g = q.grid();
  SampledFunction line =
      SampledFunction::sample(g, [&](double x) { return u0 + u0p * x; });
  SampledFunction phi = line;

  double diff = 0.0;
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    // Int_0^x (x - s) q(s) phi(s) ds = x C1(x) - C2(x) with two cumulative
    // integrals, keeping each sweep O(n)
    SampledFunction qphi = pointwise(q, phi);
    SampledFunction sqphi(g);
    for (int i = 0; i < g.size(); ++i) sqphi[i] = g.node(i) * qphi[i];
    SampledFunction c1 = cumulative_integral(qphi);
    SampledFunction c2 = cumulative_integral(sqphi);

    SampledFunction next(g);
    diff = 0.0;
    for (int i = 0; i < g.size(); ++i) {
      next[i] = line[i] + g.node(i) * c1[i] - c2[i];
      diff = std::max(diff, std::abs(next[i] - phi[i]));
    }
    phi = std::move(next);
    if (diff <= opts.tol) return phi;
  }
  throw TruncationError(
      "base solution did not converge in " +
          std::to_string(opts.max_sweeps) + " sweeps",
      diff);
}

BaseSolutionPair make_base_pair(const SampledFunction& q, Complex a0,
                                Complex a0p, Complex b0, Complex b0p,
                                const PicardOptions& opts) {
  BaseSolutionPair pair{solve_base_solution(q, a0, a0p, opts),
                        solve_base_solution(q, b0, b0p, opts),
                        {a0, a0p, b0, b0p},
                        a0 * b0p - a0p * b0};
  return pair;
}

BaseSolutionPair canonical_pair(const SampledFunction& q,
                                const PicardOptions& opts) {
  return make_base_pair(q, Complex(1.0), Complex(0.0), Complex(0.0),
                        Complex(1.0), opts);
}

Complex green_function(const BaseSolutionPair& pair, double x, double s) {
  require_nondegenerate(pair);
  const Complex p0x = interp_linear(pair.phi0, x);
  const Complex p1x = interp_linear(pair.phi1, x);
  const Complex p0s = interp_linear(pair.phi0, s);
  const Complex p1s = interp_linear(pair.phi1, s);
  return (p0s * p1x - p0x * p1s) / pair.wronskian;
}

SLBase build_slbase(const BaseSolutionPair& pair, int k_max) {
  if (k_max < 1) throw std::invalid_argument("slbase k_max must be >= 1");
  require_nondegenerate(pair);
  require_same_grid(pair.phi0.grid(), pair.phi1.grid());

  SLBase base{pair, {}};
  base.members.reserve(k_max + 1);
  base.members.push_back(pair.phi0);
  base.members.push_back(pair.phi1);
  const Complex w = pair.wronskian;
  for (int k = 2; k <= k_max; ++k) {
    const SampledFunction& prev = base.members[k - 2];
    SampledFunction c0 = cumulative_integral(pointwise(pair.phi0, prev));
    SampledFunction c1 = cumulative_integral(pointwise(pair.phi1, prev));
    SampledFunction memb(pair.phi0.grid());
    const Complex scale = Complex(static_cast<double>(k) * (k - 1)) / w;
    for (int i = 0; i < memb.size(); ++i)
      memb[i] = scale * (pair.phi1[i] * c0[i] - pair.phi0[i] * c1[i]);
    base.members.push_back(std::move(memb));
  }
  return base;
}

namespace {

// Thin QR by modified Gram-Schmidt with one reorthogonalization pass;
// columns are the scaled monomials (x/a)^j sampled on the grid.
struct ThinQR {
  std::vector<std::vector<double>> q;  // orthonormal columns
  std::vector<std::vector<double>> r;  // upper triangular, r[j][i], i <= j
};

ThinQR mgs_vandermonde(const Grid& g, int cols) {
  const int m = g.size();
  const double a = g.half_width();
  ThinQR qr;
  qr.q.resize(cols, std::vector<double>(m));
  qr.r.resize(cols, std::vector<double>(cols, 0.0));
  for (int j = 0; j < cols; ++j) {
    std::vector<double>& v = qr.q[j];
    for (int i = 0; i < m; ++i) v[i] = std::pow(g.node(i) / a, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        double dot = 0.0;
        for (int t = 0; t < m; ++t) dot += qr.q[i][t] * v[t];
        for (int t = 0; t < m; ++t) v[t] -= dot * qr.q[i][t];
        qr.r[j][i] += dot;
      }
    }
    double norm = 0.0;
    for (int t = 0; t < m; ++t) norm += v[t] * v[t];
    norm = std::sqrt(norm);
    if (norm <= 0.0)
      throw std::invalid_argument("polynomial fit basis degenerated");
    qr.r[j][j] = norm;
    for (int t = 0; t < m; ++t) v[t] /= norm;
  }
  return qr;
}

}  // namespace

std::vector<Complex> polynomial_approx(const SampledFunction& u, Complex u0,
                                       Complex u0p, int degree) {
  if (degree < 0)
    throw std::invalid_argument("polynomial degree must be >= 0");
  const Grid& g = u.grid();
  if (degree > g.subintervals())
    throw std::invalid_argument("polynomial degree exceeds grid resolution");

  std::vector<Complex> p(degree + 1, Complex(0.0));
  p[0] = u0;
  if (degree >= 1) p[1] = u0p;
  if (degree < 2) return p;

  const int cols = degree - 1;  // fit degree - 2, that many + 1 columns
  SampledFunction upp = second_difference(u);
  ThinQR qr = mgs_vandermonde(g, cols);

  // least squares in the scaled variable: coefficients solve R c = Q^T b
  std::vector<Complex> qtb(cols, Complex(0.0));
  for (int j = 0; j < cols; ++j)
    for (int t = 0; t < g.size(); ++t) qtb[j] += qr.q[j][t] * upp[t];
  std::vector<Complex> c(cols, Complex(0.0));
  for (int j = cols - 1; j >= 0; --j) {
    Complex acc = qtb[j];
    for (int i = j + 1; i < cols; ++i) acc -= qr.r[i][j] * c[i];
    c[j] = acc / qr.r[j][j];
  }

  // undo the x/a scaling and integrate twice in coefficient space
  const double a = g.half_width();
  double aj = 1.0;
  for (int j = 0; j < cols; ++j) {
    p[j + 2] = (c[j] / aj) / static_cast<double>((j + 1) * (j + 2));
    aj *= a;
  }
  return p;
}

Complex polynomial_eval(std::span<const Complex> coeffs, double x) {
  Complex acc(0.0);
  for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

}  // namespace transmute
