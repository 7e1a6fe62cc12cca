#include "transmute/kernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <tuple>

#include "transmute/errors.hpp"

namespace transmute {

namespace {

// Largest |value| over the support nodes |u| + |v| <= a.
double masked_sup(const std::vector<Complex>& field, const Grid& g) {
  const int m = g.size();
  const int c = g.center();
  double s = 0.0;
  for (int iu = 0; iu < m; ++iu) {
    const int reach = c - std::abs(iu - c);
    for (int iv = c - reach; iv <= c + reach; ++iv)
      s = std::max(s, std::abs(field[iu * m + iv]));
  }
  return s;
}

// In-place oriented trapezoid accumulation along a strided line of m values
// anchored at index c: p[i] becomes the integral from node c to node i.
void cumulative_line(Complex* p, int m, int c, int stride, double h) {
  const Complex orig_center = p[c * stride];
  Complex acc(0.0);
  Complex prev = orig_center;
  p[c * stride] = acc;
  for (int i = c + 1; i < m; ++i) {
    Complex cur = p[i * stride];
    acc += 0.5 * h * (prev + cur);
    prev = cur;
    p[i * stride] = acc;
  }
  acc = Complex(0.0);
  prev = orig_center;
  for (int i = c - 1; i >= 0; --i) {
    Complex cur = p[i * stride];
    acc -= 0.5 * h * (prev + cur);
    prev = cur;
    p[i * stride] = acc;
  }
}

}  // namespace

GoursatKernel GoursatKernel::build(const SampledFunction& q,
                                   const KernelBuildOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("kernel tol must be > 0");
  if (opts.n_max < 1) throw std::invalid_argument("kernel n_max must be >= 1");

  const Grid& g = q.grid();
  const int m = g.size();
  const int c = g.center();
  const double h = g.step();
  const double a = g.half_width();

  GoursatKernel K(g);
  K.q_l1_ = l1_norm(q);

  SampledFunction Q = cumulative_integral(q);

  auto idx = [m](int i, int j) { return i * m + j; };
  std::vector<Complex> H(m * m, Complex(0.0));
  std::vector<Complex> term(m * m, Complex(0.0));

  // First term: H_0(u, v) = 1/2 Int_0^u q, constant in v across the support.
  for (int iu = 0; iu < m; ++iu) {
    const int reach = c - std::abs(iu - c);
    for (int iv = c - reach; iv <= c + reach; ++iv)
      term[idx(iu, iv)] = 0.5 * Q[iu];
  }
  H = term;

  // Stop once both the computed term and the a-priori factorial bound on
  // the dropped tail sit below tol, so the recorded tail_bound is honest.
  const double r = a * K.q_l1_;
  double bound = K.q_l1_;  // ||q||_1 (a ||q||_1)^k / k! at k = 0
  double term_sup = masked_sup(term, g);
  K.term_history_.push_back({term_sup, bound});
  double tail = bound * r;
  int k = 0;

  while (!(term_sup <= opts.tol && tail <= opts.tol) && k + 1 < opts.n_max) {
    // next term = Int_0^u Int_0^v q(alpha + beta) * term(alpha, beta).
    // q(alpha + beta) at a (u, v) node lands exactly on x-grid node
    // iu + iv - c, so no interpolation enters the iteration.
    for (int iu = 0; iu < m; ++iu) {
      const int reach = c - std::abs(iu - c);
      for (int iv = 0; iv < m; ++iv) {
        if (std::abs(iv - c) <= reach)
          term[idx(iu, iv)] *= q[iu + iv - c];
        else
          term[idx(iu, iv)] = Complex(0.0);
      }
    }
    for (int iu = 0; iu < m; ++iu)
      cumulative_line(term.data() + idx(iu, 0), m, c, 1, h);
    for (int iv = 0; iv < m; ++iv)
      cumulative_line(term.data() + iv, m, c, m, h);
    // the sweeps leave stale values outside the support; drop them
    for (int iu = 0; iu < m; ++iu) {
      const int reach = c - std::abs(iu - c);
      for (int iv = 0; iv < m; ++iv)
        if (std::abs(iv - c) > reach) term[idx(iu, iv)] = Complex(0.0);
    }
    for (int i = 0; i < m * m; ++i) H[i] += term[i];

    ++k;
    bound *= r / k;
    term_sup = masked_sup(term, g);
    K.term_history_.push_back({term_sup, bound});
    tail = bound * r / (k + 1);
  }

  K.iterations_ = k + 1;
  K.tail_bound_ = tail;
  K.converged_ = (term_sup <= opts.tol && tail <= opts.tol);
  K.h_ = std::move(H);
  K.sup_h_ = masked_sup(K.h_, g);

  // Tabulate K(x, t) = H((x+t)/2, (x-t)/2) on the (x, t) grid.  When
  // i + j is even the image is itself a (u, v) node; otherwise it is the
  // center of a (u, v) cell and the average of that cell's corners is the
  // bilinear value -- except at cells straddling the support boundary,
  // where the outer corner carries no data and the average of the two
  // on-diagonal corners (midpoint rule on the valid segment) replaces it.
  K.k_xt_.assign(m * m, Complex(0.0));
  for (int ix = 0; ix < m; ++ix) {
    for (int it = 0; it < m; ++it) {
      const int s = ix + it;
      const int d = ix - it;
      if ((s & 1) == 0) {
        K.k_xt_[idx(ix, it)] = K.h_[idx(s / 2, c + d / 2)];
      } else {
        const int iu0 = (s - 1) / 2;
        const int iv0 = c + (d - 1) / 2;
        const bool a_in = K.inside(iu0, iv0);
        const bool b_in = K.inside(iu0 + 1, iv0);
        const bool c_in = K.inside(iu0, iv0 + 1);
        const bool d_in = K.inside(iu0 + 1, iv0 + 1);
        const Complex va = K.h_[idx(iu0, iv0)];
        const Complex vb = K.h_[idx(iu0 + 1, iv0)];
        const Complex vc = K.h_[idx(iu0, iv0 + 1)];
        const Complex vd = K.h_[idx(iu0 + 1, iv0 + 1)];
        Complex val;
        if (a_in && b_in && c_in && d_in)
          val = 0.25 * (va + vb + vc + vd);
        else if (!a_in || !d_in)
          val = 0.5 * (vb + vc);
        else
          val = 0.5 * (va + vd);
        K.k_xt_[idx(ix, it)] = val;
      }
    }
  }
  return K;
}

Complex GoursatKernel::h_value(double u, double v) const {
  const int m = grid_.size();
  const double a = grid_.half_width();
  const double h = grid_.step();
  const double slack = 0.5 * h * (1.0 + 1e-9);
  if (std::abs(u) + std::abs(v) > a + slack)
    throw GridMismatchError("kernel point outside the support |u| + |v| <= a");

  double fu = (std::clamp(u, -a, a) + a) / h;
  double fv = (std::clamp(v, -a, a) + a) / h;
  int iu0 = std::clamp(static_cast<int>(std::floor(fu)), 0, m - 2);
  int iv0 = std::clamp(static_cast<int>(std::floor(fv)), 0, m - 2);
  double su = fu - iu0;
  double sv = fv - iv0;

  const bool in00 = inside(iu0, iv0);
  const bool in10 = inside(iu0 + 1, iv0);
  const bool in01 = inside(iu0, iv0 + 1);
  const bool in11 = inside(iu0 + 1, iv0 + 1);
  const Complex f00 = h_[idx(iu0, iv0)];
  const Complex f10 = h_[idx(iu0 + 1, iv0)];
  const Complex f01 = h_[idx(iu0, iv0 + 1)];
  const Complex f11 = h_[idx(iu0 + 1, iv0 + 1)];

  const int out_count = !in00 + !in10 + !in01 + !in11;
  if (out_count == 0)
    return (1.0 - su) * (1.0 - sv) * f00 + su * (1.0 - sv) * f10 +
           (1.0 - su) * sv * f01 + su * sv * f11;
  if (out_count == 1) {
    // plane through the three corners that carry data
    if (!in11) return f00 + su * (f10 - f00) + sv * (f01 - f00);
    if (!in01) return f00 + su * (f10 - f00) + sv * (f11 - f10);
    if (!in10) return f00 + sv * (f01 - f00) + su * (f11 - f01);
    return f11 + (1.0 - su) * (f01 - f11) + (1.0 - sv) * (f10 - f11);
  }
  // Reachable only when the query sits on a support-boundary node; take
  // the nearest corner that carries data.
  double best = 1e300;
  Complex val(0.0);
  const std::array<std::tuple<bool, double, Complex>, 4> corners = {
      std::tuple{in00, su * su + sv * sv, f00},
      std::tuple{in10, (1 - su) * (1 - su) + sv * sv, f10},
      std::tuple{in01, su * su + (1 - sv) * (1 - sv), f01},
      std::tuple{in11, (1 - su) * (1 - su) + (1 - sv) * (1 - sv), f11}};
  for (const auto& [in, dist, f] : corners) {
    if (in && dist < best) {
      best = dist;
      val = f;
    }
  }
  return val;
}

Complex GoursatKernel::kernel_at(double x, double t) const {
  const double a = grid_.half_width();
  const double slack = 0.5 * grid_.step() * (1.0 + 1e-9);
  if (std::abs(x) > a + slack)
    throw GridMismatchError("kernel evaluation point |x| > a");
  if (std::abs(t) > std::abs(x) + slack)
    throw GridMismatchError("kernel evaluation point outside |t| <= |x|");
  x = std::clamp(x, -a, a);
  if (std::abs(t) > std::abs(x)) t = (t < 0 ? -std::abs(x) : std::abs(x));
  return h_value(0.5 * (x + t), 0.5 * (x - t));
}

double kernel_distance(const GoursatKernel& k1, const GoursatKernel& k2) {
  require_same_grid(k1.grid(), k2.grid());
  const Grid& g = k1.grid();
  const int c = g.center();
  double d = 0.0;
  for (int iu = 0; iu < g.size(); ++iu) {
    const int reach = c - std::abs(iu - c);
    for (int iv = c - reach; iv <= c + reach; ++iv)
      d = std::max(d, std::abs(k1.h_node(iu, iv) - k2.h_node(iu, iv)));
  }
  return d;
}

GoursatResiduals verify_goursat_bc(const GoursatKernel& k,
                                   const SampledFunction& q) {
  require_same_grid(k.grid(), q.grid());
  const Grid& g = k.grid();
  SampledFunction Q = cumulative_integral(q);
  double diag = 0.0, anti = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    const double x = g.node(i);
    diag = std::max(diag, std::abs(k.kernel_at(x, x) - 0.5 * Q[i]));
    anti = std::max(anti, std::abs(k.kernel_at(x, -x)));
  }
  return {diag, anti};
}

namespace {

// Smooth compactly supported bump (1 - s^2)^3 and its derivative.
double bump(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double w = 1.0 - s * s;
  return w * w * w;
}

double bump_prime(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double w = 1.0 - s * s;
  return -6.0 * s * w * w;
}

struct BumpSpec {
  double cx, ct, bx, bt;
};

// Deterministic family of product bumps, all supported inside the square.
BumpSpec bump_spec(int i, double a) {
  static constexpr std::array<std::array<double, 4>, 8> table = {{
      {0.00, 0.00, 0.90, 0.90},
      {0.30, -0.20, 0.50, 0.60},
      {-0.40, 0.35, 0.45, 0.50},
      {0.15, 0.50, 0.40, 0.35},
      {-0.25, -0.45, 0.55, 0.40},
      {0.50, 0.10, 0.35, 0.50},
      {-0.10, 0.20, 0.70, 0.60},
      {0.05, -0.30, 0.60, 0.65},
  }};
  const auto& row = table[i % table.size()];
  const double shrink = std::pow(0.75, i / static_cast<int>(table.size()));
  return {row[0] * a, row[1] * a, row[2] * a * shrink, row[3] * a * shrink};
}

}  // namespace

double verify_weak_goursat(const GoursatKernel& k, const SampledFunction& q,
                           int family_size) {
  if (family_size < 1)
    throw std::invalid_argument("weak-form family size must be >= 1");
  require_same_grid(k.grid(), q.grid());
  const Grid& g = k.grid();
  const int m = g.size();
  const int n = g.subintervals();
  const double h = g.step();
  const double a = g.half_width();

  // finite-difference x- and t-derivatives of the tabulated K, one-sided
  // toward the edges of the square
  std::vector<Complex> kx(m * m), kt(m * m);
  auto idx = [m](int i, int j) { return i * m + j; };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Complex dx, dt;
      if (i == 0)
        dx = (-3.0 * k.k_node(0, j) + 4.0 * k.k_node(1, j) - k.k_node(2, j)) /
             (2.0 * h);
      else if (i == n)
        dx = (3.0 * k.k_node(n, j) - 4.0 * k.k_node(n - 1, j) +
              k.k_node(n - 2, j)) /
             (2.0 * h);
      else
        dx = (k.k_node(i + 1, j) - k.k_node(i - 1, j)) / (2.0 * h);
      if (j == 0)
        dt = (-3.0 * k.k_node(i, 0) + 4.0 * k.k_node(i, 1) - k.k_node(i, 2)) /
             (2.0 * h);
      else if (j == n)
        dt = (3.0 * k.k_node(i, n) - 4.0 * k.k_node(i, n - 1) +
              k.k_node(i, n - 2)) /
             (2.0 * h);
      else
        dt = (k.k_node(i, j + 1) - k.k_node(i, j - 1)) / (2.0 * h);
      kx[idx(i, j)] = dx;
      kt[idx(i, j)] = dt;
    }
  }

  auto weight = [&](int i) { return (i == 0 || i == n) ? 0.5 * h : h; };

  double worst = 0.0;
  for (int f = 0; f < family_size; ++f) {
    const BumpSpec b = bump_spec(f, a);
    Complex residual(0.0);
    double w11 = 0.0;
    for (int i = 0; i < m; ++i) {
      const double x = g.node(i);
      const double sx = (x - b.cx) / b.bx;
      const double px = bump(sx);
      const double dpx = bump_prime(sx) / b.bx;
      if (px == 0.0 && dpx == 0.0) continue;
      for (int j = 0; j < m; ++j) {
        const double t = g.node(j);
        const double st = (t - b.ct) / b.bt;
        const double pt = bump(st);
        const double dpt = bump_prime(st) / b.bt;
        if (pt == 0.0 && dpt == 0.0) continue;
        const double w = weight(i) * weight(j);
        const Complex kval = k.k_node(i, j);
        residual += w * (kt[idx(i, j)] * (px * dpt) -
                         kx[idx(i, j)] * (dpx * pt) - q[i] * kval * (px * pt));
        w11 += w * (std::abs(px * pt) + std::abs(dpx * pt) +
                    std::abs(px * dpt));
      }
    }
    worst = std::max(worst, std::abs(residual) / w11);
  }
  return worst;
}

GoursatKernel build_kernel(const SampledFunction& q,
                           const KernelBuildOptions& opts) {
  GoursatKernel k = GoursatKernel::build(q, opts);
  if (!k.converged())
    throw TruncationError("kernel series not converged after " +
                              std::to_string(k.iterations()) + " terms",
                          k.tail_bound());
  return k;
}

}  // namespace transmute
