#pragma once

#include "expvote/model.hpp"

namespace expvote {

struct CutoffSolution {
  double t_hat;           // equilibrium cut-off time
  double residual;        // f(t_hat) - s, in payoff-rate units
  double bracket_lo;      // final bisection bracket
  double bracket_hi;
  int iterations;
  double pivotal_belief;  // Pr(good | M-1 winners, t_hat)
};

// Right-hand side of the pivotal voter's indifference condition,
//   f(t) = P1 * lambda * [ z + (g - s)/r + (n - M) * (P2*g - s)/r ],
// where P1 = Pr(good | M-1 winners, t) and P2 = Pr(good | M winners, t).
// The M-1 winners are the pivotal event; the n-M remaining unsure voters
// each contribute the second jump term.
double indifference_rhs(const ModelParams& p, const QuorumRule& rule, double t);

// Solves f(t_hat) = s for the unique cut-off. f exceeds s near 0 under the
// validated assumptions and is strictly decreasing wherever positive, so the
// root is found by doubling the upper bracket from 1/lambda until f < s and
// then bisecting on the sign of f - s. Iterates until the bracket width is
// at most tol*max(t_hat, 1/lambda), then keeps halving until the residual
// |f(t_hat) - s| also drops to tol*s or the bracket hits double resolution
// (for n in the thousands the evaluation noise of f grows with n and caps
// the achievable residual; t_hat itself stays accurate to ~ulp).
//
// Throws NoInteriorEquilibrium if f is already <= s at t = 1e-12/lambda,
// NonConvergence after 200 bisection steps, std::invalid_argument for
// tol outside (0, 1e-3].
CutoffSolution solve_cutoff(const ModelParams& p, const QuorumRule& rule,
                            double tol = 1e-10);

}  // namespace expvote
