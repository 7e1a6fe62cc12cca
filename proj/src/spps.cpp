#include "transmute/spps.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "transmute/errors.hpp"

namespace transmute {

namespace {

void require_usable(const SLBase& base) {
  if (base.members.size() < 2)
    throw std::invalid_argument("base must hold at least two members");
  const double scale =
      std::max(1.0, base.pair.phi0.sup_norm() * base.pair.phi1.sup_norm());
  if (std::abs(base.pair.wronskian) <= 1e-12 * scale)
    throw DegenerateBasisError("base pair has vanishing Wronskian");
}

}  // namespace

SPPSSolution spps_solve(const SLBase& base, Complex lambda, double tol) {
  require_usable(base);
  if (!(tol > 0.0)) throw std::invalid_argument("spps tol must be > 0");
  const int top = static_cast<int>(base.members.size()) - 1;

  SPPSSolution sol{lambda, 0, 0.0, base.members[0], base.members[1]};
  if (lambda == Complex(0.0)) return sol;  // only the k = 0 terms survive

  // lambda^k / (2k)! and lambda^k / (2k+1)! via stable recurrences
  Complex c_even(1.0), c_odd(1.0);
  double t_even = sol.v1.sup_norm();
  double t_odd = sol.v2.sup_norm();

  for (int k = 1;; ++k) {
    const bool done = t_even <= tol * std::max(1.0, sol.v1.sup_norm()) &&
                      t_odd <= tol * std::max(1.0, sol.v2.sup_norm());
    if (done) break;
    if (2 * k + 1 > top)
      throw TruncationError(
          "spectral series not converged with " + std::to_string(top + 1) +
              " base members at |lambda| = " + std::to_string(std::abs(lambda)),
          std::max(t_even, t_odd));
    c_even *= lambda / static_cast<double>((2 * k - 1) * (2 * k));
    c_odd *= lambda / static_cast<double>((2 * k) * (2 * k + 1));
    t_even = 0.0;
    t_odd = 0.0;
    for (int i = 0; i < sol.v1.size(); ++i) {
      const Complex te = c_even * base.members[2 * k][i];
      const Complex to = c_odd * base.members[2 * k + 1][i];
      sol.v1[i] += te;
      sol.v2[i] += to;
      t_even = std::max(t_even, std::abs(te));
      t_odd = std::max(t_odd, std::abs(to));
    }
    sol.k_used = k;
    sol.tail_estimate = std::max(t_even, t_odd);
  }
  return sol;
}

SampledFunction general_solution(const SLBase& base, Complex lambda,
                                 Complex c1, Complex c2, double tol) {
  SPPSSolution sol = spps_solve(base, lambda, tol);
  SampledFunction out = c1 * sol.v1;
  out += c2 * sol.v2;
  return out;
}

Complex dirichlet_char(const SLBase& base, Complex lambda, double left,
                       double right) {
  require_usable(base);
  const Grid& g = base.pair.phi0.grid();
  const int il = g.nearest_node(left);
  const int ir = g.nearest_node(right);
  const int top = static_cast<int>(base.members.size()) - 1;
  const double tol = 1e-12;

  // same series, but only the two endpoint values are needed
  Complex v1l = base.members[0][il], v1r = base.members[0][ir];
  Complex v2l = base.members[1][il], v2r = base.members[1][ir];
  if (lambda != Complex(0.0)) {
    Complex c_even(1.0), c_odd(1.0);
    for (int k = 1;; ++k) {
      const double scale =
          std::max({1.0, std::abs(v1l), std::abs(v1r), std::abs(v2l),
                    std::abs(v2r)});
      const double last =
          std::max({std::abs(c_even) * std::abs(base.members[2 * k - 2][il]),
                    std::abs(c_even) * std::abs(base.members[2 * k - 2][ir]),
                    std::abs(c_odd) * std::abs(base.members[2 * k - 1][il]),
                    std::abs(c_odd) * std::abs(base.members[2 * k - 1][ir])});
      if (k > 1 && last <= tol * scale) break;
      if (2 * k + 1 > top)
        throw TruncationError("characteristic series not converged", last);
      c_even *= lambda / static_cast<double>((2 * k - 1) * (2 * k));
      c_odd *= lambda / static_cast<double>((2 * k) * (2 * k + 1));
      v1l += c_even * base.members[2 * k][il];
      v1r += c_even * base.members[2 * k][ir];
      v2l += c_odd * base.members[2 * k + 1][il];
      v2r += c_odd * base.members[2 * k + 1][ir];
    }
  }
  return v1l * v2r - v1r * v2l;
}

std::vector<Complex> find_eigenvalues(const SLBase& base, double left,
                                      double right,
                                      const EigenvalueScan& scan, int count) {
  if (!(scan.lambda_min < scan.lambda_max))
    throw std::invalid_argument("eigenvalue scan window is empty");
  if (scan.samples < 2)
    throw std::invalid_argument("eigenvalue scan needs at least 2 samples");
  if (count < 1) return {};

  auto chi = [&](double lam) {
    return dirichlet_char(base, Complex(lam), left, right).real();
  };

  std::vector<Complex> roots;
  const double width = scan.lambda_max - scan.lambda_min;
  double prev_lam = scan.lambda_min;
  double prev_val = chi(prev_lam);
  for (int s = 1; s < scan.samples && static_cast<int>(roots.size()) < count;
       ++s) {
    const double lam = scan.lambda_min + width * s / (scan.samples - 1);
    const double val = chi(lam);
    if (prev_val == 0.0) {
      roots.emplace_back(prev_lam);
    } else if (val != 0.0 && std::signbit(val) != std::signbit(prev_val)) {
      double lo = prev_lam, hi = lam, flo = prev_val;
      while (hi - lo > scan.tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = chi(mid);
        if (fmid == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(fmid) == std::signbit(flo)) {
          lo = mid;
          flo = fmid;
        } else {
          hi = mid;
        }
      }
      roots.emplace_back(0.5 * (lo + hi));
    }
    prev_lam = lam;
    prev_val = val;
  }
  if (static_cast<int>(roots.size()) < count && prev_val == 0.0)
    roots.emplace_back(prev_lam);
  return roots;
}

}  // namespace transmute
