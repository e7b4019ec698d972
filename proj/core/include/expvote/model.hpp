#pragma once

#include "expvote/errors.hpp"

namespace expvote {

enum class State { H, L };

inline const char* state_name(State w) { return w == State::H ? "H" : "L"; }

// The seven primitives of the voting game. The expected risky flow g is
// always derived as lambda*z, never stored, so it cannot drift out of sync.
struct ModelParams {
  double q0;      // prior Pr(state = H)
  double rho_h;   // Pr(good type | state H)
  double rho_l;   // Pr(good type | state L)
  double lambda;  // lump-sum arrival intensity
  double r;       // discount rate
  double s;       // safe flow payoff
  double z;       // lump-sum magnitude

  double g() const { return lambda * z; }
  double rho(State w) const { return w == State::H ? rho_h : rho_l; }
};

// Checks every standing assumption, all strict:
//   q0 in (0,1); 0 < rho_l < rho_h < 1; lambda, r, s, z > 0;
//   rho_h*g > s > rho_l*g;
//   q0*rho_h*g + (1-q0)*rho_l*g > s.
// Returns the params unchanged on success; throws ValidationError listing
// every violated condition otherwise.
ModelParams validate(const ModelParams& raw);

// Collective decision rule: R is implemented iff at least ceil(k*n) agents
// vote for it.
struct QuorumRule {
  double k;  // threshold fraction in (0, 1]
  int n;     // number of agents, >= 1

  // M = ceil(k*n). Products within 1e-9 of an integer snap down to it so
  // that k*n = 3 stored as 3.0000000000000004 still yields M = 3.
  int quorum() const;
};

// Unsure voter's belief that her own type is good, conditional on the state,
// after receiving nothing up to time t:
//   rho_w e^{-lambda t} / (rho_w e^{-lambda t} + 1 - rho_w).
double p_good_given_state(const ModelParams& p, State w, double t);

// Log posterior odds of state H given exactly k_winners sure winners among n
// agents at time t. Computed term by term in log space so large n is safe.
// Throws DegenerateEvent when k_winners >= 1 at t = 0.
double log_posterior_odds(const ModelParams& p, int n, int k_winners, double t);

// Posterior Pr(state = H | k_winners, t): logistic transform of the odds,
// with the log odds clamped to [-700, 700] before exponentiation.
double p_state_h(const ModelParams& p, int n, int k_winners, double t);

// Unsure voter's type belief given the winner count:
//   Pr(H|K,t) Pr(good|H,t) + Pr(L|K,t) Pr(good|L,t).
double p_good_given_winners(const ModelParams& p, int n, int k_winners, double t);

// All belief quantities at one (n, K, t) point.
struct BeliefPoint {
  double t;
  int k_winners;
  double p_good_h;    // Pr(good | H, t)
  double p_good_l;    // Pr(good | L, t)
  double log_odds_h;  // ln Pr(H|K,t)/Pr(L|K,t)
  double p_h;         // Pr(H | K, t)
  double p_good;      // Pr(good | K, t)
};

BeliefPoint belief_point(const ModelParams& p, int n, int k_winners, double t);

}  // namespace expvote
