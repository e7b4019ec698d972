#include "expvote/model.hpp"

#include <cmath>
#include <sstream>

namespace expvote {

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::PriorOutOfRange:     return "PriorOutOfRange";
    case Violation::TypeProbOrder:       return "TypeProbOrder";
    case Violation::Assumption1Violated: return "Assumption1Violated";
    case Violation::Assumption2Violated: return "Assumption2Violated";
    case Violation::NonpositiveRate:     return "NonpositiveRate";
  }
  return "Unknown";
}

bool ValidationError::has(Violation v) const {
  for (Violation x : violations_)
    if (x == v) return true;
  return false;
}

ModelParams validate(const ModelParams& raw) {
  std::vector<Violation> bad;
  std::ostringstream msg;
  auto flag = [&](Violation v, const char* text) {
    bad.push_back(v);
    if (!msg.str().empty()) msg << "; ";
    msg << violation_name(v) << ": " << text;
  };

  if (!(std::isfinite(raw.q0) && raw.q0 > 0.0 && raw.q0 < 1.0))
    flag(Violation::PriorOutOfRange, "q0 must lie strictly in (0,1)");
  if (!(std::isfinite(raw.rho_h) && std::isfinite(raw.rho_l) &&
        raw.rho_l > 0.0 && raw.rho_h > raw.rho_l && raw.rho_h < 1.0))
    flag(Violation::TypeProbOrder, "need 0 < rho_l < rho_h < 1");
  if (!(std::isfinite(raw.lambda) && raw.lambda > 0.0 &&
        std::isfinite(raw.r) && raw.r > 0.0 &&
        std::isfinite(raw.s) && raw.s > 0.0 &&
        std::isfinite(raw.z) && raw.z > 0.0))
    flag(Violation::NonpositiveRate, "lambda, r, s, z must all be positive and finite");

  // Only meaningful once the basic ranges hold.
  if (bad.empty()) {
    const double g = raw.g();
    if (!(raw.rho_h * g > raw.s && raw.s > raw.rho_l * g))
      flag(Violation::Assumption1Violated, "need rho_h*g > s > rho_l*g");
    const double prior_flow = raw.q0 * raw.rho_h * g + (1.0 - raw.q0) * raw.rho_l * g;
    if (!(prior_flow > raw.s))
      flag(Violation::Assumption2Violated,
           "prior expected risky flow must strictly exceed s");
  }

  if (!bad.empty()) throw ValidationError(std::move(bad), msg.str());
  return raw;
}

int QuorumRule::quorum() const {
  if (n < 1) throw std::invalid_argument("QuorumRule: n must be >= 1");
  if (!(k > 0.0 && k <= 1.0)) throw std::invalid_argument("QuorumRule: k must lie in (0,1]");
  const int m = static_cast<int>(std::ceil(k * static_cast<double>(n) - 1e-9));
  return std::max(1, std::min(m, n));
}

double p_good_given_state(const ModelParams& p, State w, double t) {
  if (!(t >= 0.0)) throw std::domain_error("p_good_given_state: t must be >= 0");
  const double rho = p.rho(w);
  const double e = std::exp(-p.lambda * t);
  return rho * e / (rho * e + 1.0 - rho);
}

double log_posterior_odds(const ModelParams& p, int n, int k_winners, double t) {
  if (k_winners < 0 || k_winners > n)
    throw std::domain_error("log_posterior_odds: need 0 <= K <= n");
  if (!(t >= 0.0)) throw std::domain_error("log_posterior_odds: t must be >= 0");
  if (k_winners >= 1 && t == 0.0)
    throw DegenerateEvent("a sure winner cannot exist at t = 0");

  const double w = -std::expm1(-p.lambda * t);  // Pr(arrival by t | good) = 1 - e^{-lambda t}
  const double prior = std::log(p.q0) - std::log1p(-p.q0);
  const double winner_term = k_winners * (std::log(p.rho_h) - std::log(p.rho_l));
  const double unsure_term =
      (n - k_winners) * (std::log1p(-p.rho_h * w) - std::log1p(-p.rho_l * w));
  return prior + winner_term + unsure_term;
}

namespace {

double logistic(double log_odds) {
  const double x = std::max(-700.0, std::min(700.0, log_odds));
  return 1.0 / (1.0 + std::exp(-x));
}

}  // namespace

double p_state_h(const ModelParams& p, int n, int k_winners, double t) {
  return logistic(log_posterior_odds(p, n, k_winners, t));
}

BeliefPoint belief_point(const ModelParams& p, int n, int k_winners, double t) {
  BeliefPoint b;
  b.t = t;
  b.k_winners = k_winners;
  b.log_odds_h = log_posterior_odds(p, n, k_winners, t);
  b.p_h = logistic(b.log_odds_h);
  b.p_good_h = p_good_given_state(p, State::H, t);
  b.p_good_l = p_good_given_state(p, State::L, t);
  b.p_good = b.p_h * b.p_good_h + (1.0 - b.p_h) * b.p_good_l;
  return b;
}

double p_good_given_winners(const ModelParams& p, int n, int k_winners, double t) {
  return belief_point(p, n, k_winners, t).p_good;
}

}  // namespace expvote
