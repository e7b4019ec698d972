#include "expvote/equilibrium.hpp"

#include <cmath>

namespace expvote {

double indifference_rhs(const ModelParams& p, const QuorumRule& rule, double t) {
  const int m = rule.quorum();
  const double p1 = p_good_given_winners(p, rule.n, m - 1, t);
  const double p2 = p_good_given_winners(p, rule.n, m, t);
  const double g = p.g();
  return p1 * p.lambda *
         (p.z + (g - p.s) / p.r + (rule.n - m) * (p2 * g - p.s) / p.r);
}

CutoffSolution solve_cutoff(const ModelParams& p, const QuorumRule& rule, double tol) {
  if (!(tol > 0.0 && tol <= 1e-3))
    throw std::invalid_argument("solve_cutoff: tol must lie in (0, 1e-3]");
  const double s = p.s;
  const double t_min = 1e-12 / p.lambda;

  if (!(indifference_rhs(p, rule, t_min) > s))
    throw NoInteriorEquilibrium("indifference value does not exceed s near t = 0");

  double lo = t_min;
  double hi = 1.0 / p.lambda;
  int doublings = 0;
  while (indifference_rhs(p, rule, hi) >= s) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 200)
      throw NonConvergence("upper bracket expansion failed to find f < s");
  }

  // Invariant: f(lo) >= s > f(hi). f - s changes sign exactly once. Once the
  // width target is met, keep halving to drive the residual toward tol*s as
  // well; stop when the bracket reaches machine resolution (for n in the
  // thousands, the evaluation noise of f itself caps how small the residual
  // can get).
  CutoffSolution sol{};
  int iters = 0;
  bool converged = false;
  double mid = 0.5 * (lo + hi);
  while (iters < 200) {
    ++iters;
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {  // bracket exhausted at double resolution
      mid = lo;
      converged = true;
      break;
    }
    const double fmid = indifference_rhs(p, rule, mid);
    if (fmid >= s)
      lo = mid;
    else
      hi = mid;
    const bool width_ok = (hi - lo) <= tol * std::max(mid, 1.0 / p.lambda);
    const bool resid_ok = std::abs(fmid - s) <= tol * s;
    if (width_ok && resid_ok) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw NonConvergence("bisection did not meet tolerance within 200 iterations");

  sol.t_hat = mid;
  sol.residual = indifference_rhs(p, rule, mid) - s;
  sol.bracket_lo = lo;
  sol.bracket_hi = hi;
  sol.iterations = iters;
  sol.pivotal_belief = p_good_given_winners(p, rule.n, rule.quorum() - 1, mid);
  return sol;
}

}  // namespace expvote
