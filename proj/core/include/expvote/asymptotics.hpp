#pragma once

#include "expvote/model.hpp"

namespace expvote {

enum class Aggregation { Aggregates, FailsInH };

inline const char* aggregation_name(Aggregation a) {
  return a == Aggregation::Aggregates ? "Aggregates" : "FailsInH";
}

// Myopic cut-off: the unique t with Pr(good | H, t) = s/g, in closed form
//   t_bar = (1/lambda) * ln[ rho_h (g - s) / (s (1 - rho_h)) ].
double myopic_cutoff(const ModelParams& p);

// Threshold fraction above which the pivotal likelihood ratio favors H at
// every time:
//   k_hat = ln[(1-rho_l)/(1-rho_h)] / ( ln[rho_h/rho_l] + ln[(1-rho_l)/(1-rho_h)] ).
double k_hat(const ModelParams& p);

// Limit arrival fraction on the interior branch: the unique x in (0,1) with
//   (rho_h/rho_l)^k [(1 - rho_h x)/(1 - rho_l x)]^{1-k} = 1,
// in closed form x = (A-1)/(A rho_h - rho_l) with A = (rho_h/rho_l)^{k/(1-k)}.
// Requires 0 < k < k_hat; throws std::domain_error otherwise.
double interior_arrival_fraction(const ModelParams& p, double k);

// Interior-branch limit cut-off t'_k = -(1/lambda) ln(1 - x_k). Same domain
// as interior_arrival_fraction.
double limit_cutoff_interior(const ModelParams& p, double k);

// The unique k_bar in (0, k_hat) at which the interior cut-off reaches the
// myopic one; solved by bisection in x-space to 1e-12.
double k_bar(const ModelParams& p);

// Limit of the equilibrium cut-offs as n grows: the interior branch below
// k_bar, the myopic cut-off at and above it.
double limit_cutoff(const ModelParams& p, double k);

// Limit cumulative arrival fraction 1 - e^{-lambda * limit_cutoff(k)}.
double limit_arrival_fraction(const ModelParams& p, double k);

// Aggregation threshold k_star = (rho_h g - s)/(g - s); equals
// rho_h (1 - e^{-lambda t_bar}).
double aggregation_threshold(const ModelParams& p);

// Limit fraction of sure winners in the given state at the limit cut-off:
// rho_w * limit_arrival_fraction(k).
double winner_fraction_limit(const ModelParams& p, State w, double k);

// Aggregates iff k < k_star; the boundary k = k_star fails in state H.
// Equality is detected within 1e-12 absolute.
Aggregation classify_aggregation(const ModelParams& p, double k);

// Single-agent cut-off below which voting R stays undominated: with
//   c = r s / ((r + lambda) g - lambda s),
// the unique t with Pr(good | H, t) = c, in closed form. Always > t_bar.
double undominated_sincerity_cutoff(const ModelParams& p);

// Pr(no sure winner by time t in state w among n agents):
//   [1 - rho_w (1 - e^{-lambda t})]^n, evaluated via n*log1p(.).
double prob_no_winner(const ModelParams& p, State w, double t, int n);

struct AsymptoticProfile {
  double t_bar;     // myopic cut-off
  double k_hat;     // odds-neutrality threshold
  double k_bar;     // kink of the limit cut-off curve
  double k_star;    // aggregation threshold
  double t_tilde;   // single-agent undominated cut-off
  double k;         // queried threshold
  double t_hat_k;   // limit cut-off at k
  double x_k;       // limit arrival fraction at k
  double frac_h;    // limit winner fraction in state H
  double frac_l;    // limit winner fraction in state L
  Aggregation aggregation;
};

AsymptoticProfile asymptotic_profile(const ModelParams& p, double k);

}  // namespace expvote
