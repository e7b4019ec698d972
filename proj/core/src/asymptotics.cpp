#include "expvote/asymptotics.hpp"

#include <cmath>

namespace expvote {

double myopic_cutoff(const ModelParams& p) {
  const double g = p.g();
  return std::log(p.rho_h * (g - p.s) / (p.s * (1.0 - p.rho_h))) / p.lambda;
}

double k_hat(const ModelParams& p) {
  const double a = std::log(p.rho_h / p.rho_l);
  const double b = std::log((1.0 - p.rho_l) / (1.0 - p.rho_h));
  return b / (a + b);
}

double interior_arrival_fraction(const ModelParams& p, double k) {
  if (!(k > 0.0 && k < k_hat(p)))
    throw std::domain_error(
        "interior_arrival_fraction: k must lie strictly between 0 and k_hat");
  const double a = std::pow(p.rho_h / p.rho_l, k / (1.0 - k));
  return (a - 1.0) / (a * p.rho_h - p.rho_l);
}

double limit_cutoff_interior(const ModelParams& p, double k) {
  return -std::log1p(-interior_arrival_fraction(p, k)) / p.lambda;
}

double k_bar(const ModelParams& p) {
  // x_k runs monotonically from 0 to 1 as k goes from 0 to k_hat, so solve
  // x_k = 1 - e^{-lambda t_bar} by bisection on k. Bounded in x-space, unlike
  // the cut-off itself, which blows up near k_hat.
  const double x_bar = -std::expm1(-p.lambda * myopic_cutoff(p));
  double lo = 0.0;
  double hi = k_hat(p);
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    mid = 0.5 * (lo + hi);
    const double x = interior_arrival_fraction(p, mid);
    if (std::abs(x - x_bar) <= 1e-12) break;
    if (x < x_bar)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

double limit_cutoff(const ModelParams& p, double k) {
  if (!(k > 0.0 && k <= 1.0))
    throw std::domain_error("limit_cutoff: k must lie in (0,1]");
  return k < k_bar(p) ? limit_cutoff_interior(p, k) : myopic_cutoff(p);
}

double limit_arrival_fraction(const ModelParams& p, double k) {
  if (!(k > 0.0 && k <= 1.0))
    throw std::domain_error("limit_arrival_fraction: k must lie in (0,1]");
  if (k < k_bar(p)) return interior_arrival_fraction(p, k);
  return -std::expm1(-p.lambda * myopic_cutoff(p));
}

double aggregation_threshold(const ModelParams& p) {
  const double g = p.g();
  return (p.rho_h * g - p.s) / (g - p.s);
}

double winner_fraction_limit(const ModelParams& p, State w, double k) {
  return p.rho(w) * limit_arrival_fraction(p, k);
}

Aggregation classify_aggregation(const ModelParams& p, double k) {
  // equality is part of the failing interval; detect it within 1e-12 so the
  // boundary stays stable under rounding of the threshold formula
  return k < aggregation_threshold(p) - 1e-12 ? Aggregation::Aggregates
                                              : Aggregation::FailsInH;
}

double undominated_sincerity_cutoff(const ModelParams& p) {
  const double g = p.g();
  const double c = p.r * p.s / ((p.r + p.lambda) * g - p.lambda * p.s);
  return std::log(p.rho_h * (1.0 - c) / (c * (1.0 - p.rho_h))) / p.lambda;
}

double prob_no_winner(const ModelParams& p, State w, double t, int n) {
  if (!(t >= 0.0)) throw std::domain_error("prob_no_winner: t must be >= 0");
  if (n < 1) throw std::domain_error("prob_no_winner: n must be >= 1");
  const double arrived = -std::expm1(-p.lambda * t);
  return std::exp(n * std::log1p(-p.rho(w) * arrived));
}

AsymptoticProfile asymptotic_profile(const ModelParams& p, double k) {
  AsymptoticProfile a{};
  a.t_bar = myopic_cutoff(p);
  a.k_hat = k_hat(p);
  a.k_bar = k_bar(p);
  a.k_star = aggregation_threshold(p);
  a.t_tilde = undominated_sincerity_cutoff(p);
  a.k = k;
  a.t_hat_k = limit_cutoff(p, k);
  a.x_k = limit_arrival_fraction(p, k);
  a.frac_h = p.rho_h * a.x_k;
  a.frac_l = p.rho_l * a.x_k;
  a.aggregation = classify_aggregation(p, k);
  return a;
}

}  // namespace expvote
