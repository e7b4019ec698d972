#pragma once

#include <cstdint>
#include <vector>

#include "expvote/model.hpp"
#include "expvote/stats.hpp"

namespace expvote {

// One sampled world: the state, each agent's type, and each good agent's
// first lump-sum time (+infinity for bad types). Later arrivals never matter
// for play, so they are not drawn; payoffs use closed-form expectations.
struct WorldDraw {
  State state;
  std::vector<std::uint8_t> good;      // per-agent type flag
  std::vector<double> first_arrival;   // +inf sentinel for bad types
  std::uint64_t seed;                  // seed material: (seed, replicate)
  std::uint64_t replicate;

  int n() const { return static_cast<int>(good.size()); }
};

// Draws state ~ Bernoulli(q0) on H, types i.i.d. Bernoulli(rho_state), and
// first arrivals i.i.d. Exponential(lambda) for good types, all from the
// counter-based streams in rng.hpp.
WorldDraw draw_world(const ModelParams& p, int n, std::uint64_t seed,
                     std::uint64_t replicate = 0);

// Same, with the state forced; used by the stratified estimators, which
// condition on the state rather than sampling it.
WorldDraw draw_world_in_state(const ModelParams& p, int n, State w,
                              std::uint64_t seed, std::uint64_t replicate = 0);

// Number of sure winners by time t: agents whose first arrival is <= t.
int winners_at(const WorldDraw& world, double t);

enum class Implemented { RForever, SForever };

inline const char* implemented_name(Implemented i) {
  return i == Implemented::RForever ? "R_forever" : "S_forever";
}

struct GameOutcome {
  State state;
  int winners_at_cutoff;       // winner count when the outcome was decided
  Implemented implemented_after;
  bool aggregated_correctly;   // R forever in H, S forever in L
  double per_capita_payoff;    // expected discounted payoff per agent
  bool stopped_at_t1;          // reversible runs only: no winner by the probe time
};

// Plays the irreversible game against a drawn world: R is implemented on
// [0, cutoff); at the cutoff, R continues forever iff at least M agents are
// sure winners, otherwise S absorbs. Payoffs are expected discounted values
// given types and the decided branch: good types collect g-flow in
// expectation while R runs, bad types collect nothing, and S pays s to all.
GameOutcome run_irreversible(const ModelParams& p, const QuorumRule& rule,
                             double cutoff, const WorldDraw& world);

// Reversible profile with a probe: unsure voters show their hand at t1. If
// nobody has won by t1, S absorbs immediately; otherwise play continues
// exactly as the irreversible game with the given cutoff.
// Requires 0 < t1 < cutoff (throws InvalidT1).
GameOutcome run_reversible_constructed(const ModelParams& p, const QuorumRule& rule,
                                       double t1, double cutoff,
                                       const WorldDraw& world);

// Full-information utilitarian benchmark: R forever iff the realized good
// count satisfies count*g >= n*s (ties resolve to R).
Implemented first_best_outcome(const WorldDraw& world, const ModelParams& p);

struct AggregationEstimate {
  double k;
  int n;
  double cutoff_used;
  long long replicates;     // per state
  double p_agg_h;           // frequency of {winners >= M} in forced-H worlds
  double p_agg_l;           // frequency of {winners < M} in forced-L worlds
  Interval ci_h;            // Wilson 95% intervals
  Interval ci_l;
  double oracle_h;          // exact Pr(Bin(n, rho_h(1-e^{-lambda c})) >= M)
  double oracle_l;          // exact Pr(Bin(n, rho_l(1-e^{-lambda c})) < M)
};

// Stratified Monte Carlo of the two aggregation events at a fixed cutoff,
// with exact binomial tails alongside. The replicate loop fans out over
// `threads` workers (0 = hardware concurrency); results are identical for
// any worker count because every replicate owns its stream and the reduction
// is a sum of counts.
AggregationEstimate estimate_aggregation(const ModelParams& p, const QuorumRule& rule,
                                         double cutoff, long long replicates,
                                         std::uint64_t seed, int threads = 0);

struct ConvergenceRow {
  int n;
  double t_hat_kn;   // finite-n equilibrium cut-off
  double gap;        // |t_hat_kn - limit cut-off|
  AggregationEstimate agg;  // estimated at the finite-n cut-off
};

// For each n in increasing n_list: solve the finite-n cut-off, measure its
// gap to the limit cut-off, and estimate aggregation at that cut-off.
std::vector<ConvergenceRow> convergence_study(const ModelParams& p, double k,
                                              const std::vector<int>& n_list,
                                              long long replicates,
                                              std::uint64_t seed,
                                              double tol = 1e-10, int threads = 0);

struct ReversibleEstimate {
  double k;
  int n;
  double t1;
  double cutoff;
  long long replicates;     // per state
  double p_s_forever_h;     // frequency of S absorbing, forced-H worlds
  double p_s_forever_l;
  Interval ci_h;
  Interval ci_l;
  double lower_bound_h;     // exact prob_no_winner(H, t1, n)
};

// Stratified Monte Carlo of Pr(S forever | state) under the reversible
// probe profile, with the exact no-winner-by-t1 lower bound for state H.
ReversibleEstimate estimate_reversible(const ModelParams& p, const QuorumRule& rule,
                                       double t1, double cutoff, long long replicates,
                                       std::uint64_t seed, int threads = 0);

}  // namespace expvote
