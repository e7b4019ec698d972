#include "expvote/equilibrium.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "common.hpp"
#include "doctest.h"
#include "expvote/asymptotics.hpp"
#include "oracles.hpp"

using namespace expvote;

namespace {

// Random valid parameter sets: sample the primitives, then place s strictly
// inside (rho_l*g, prior mix) so both standing assumptions hold with margin.
ModelParams random_valid_params(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    ModelParams p{};
    p.q0 = 0.05 + 0.9 * u(gen);
    p.rho_l = 0.05 + 0.55 * u(gen);
    p.rho_h = p.rho_l + 0.05 + (0.93 - p.rho_l - 0.05) * u(gen);
    if (!(p.rho_h < 0.95)) continue;
    p.lambda = 0.2 + 2.8 * u(gen);
    p.r = 0.05 + 0.95 * u(gen);
    p.z = 0.5 + 3.5 * u(gen);
    const double g = p.lambda * p.z;
    const double mix = p.q0 * p.rho_h * g + (1.0 - p.q0) * p.rho_l * g;
    const double lo = p.rho_l * g;
    const double margin = 0.02 * (mix - lo);
    p.s = lo + margin + (mix - lo - 2.0 * margin) * u(gen);
    try {
      return validate(p);
    } catch (const ValidationError&) {
      continue;
    }
  }
}

// Independent root finder for f(t) = s: dense log-spaced scan to bracket the
// crossing, then local bisection. Shares only indifference_rhs with the
// solver under test.
double grid_scan_root(const ModelParams& p, const QuorumRule& rule, int points = 4096) {
  const double t_lo = 1e-6 / p.lambda;
  double t_hi = 1.0 / p.lambda;
  while (indifference_rhs(p, rule, t_hi) >= p.s) t_hi *= 2.0;
  const double log_lo = std::log(t_lo);
  const double log_hi = std::log(t_hi);
  double prev_t = t_lo;
  double prev_f = indifference_rhs(p, rule, prev_t);
  for (int i = 1; i <= points; ++i) {
    const double t = std::exp(log_lo + (log_hi - log_lo) * i / points);
    const double f = indifference_rhs(p, rule, t);
    if ((prev_f - p.s) > 0.0 && (f - p.s) <= 0.0) {
      return oracles::bisect(
          [&](double x) { return indifference_rhs(p, rule, x) - p.s; }, prev_t, t,
          1e-12);
    }
    prev_t = t;
    prev_f = f;
  }
  throw std::runtime_error("grid_scan_root: no crossing found");
}

int sign_changes_on_grid(const ModelParams& p, const QuorumRule& rule, int points) {
  const double t_lo = 1e-6 / p.lambda;
  double t_hi = 1.0 / p.lambda;
  while (indifference_rhs(p, rule, t_hi) >= p.s) t_hi *= 2.0;
  t_hi *= 4.0;  // look past the crossing as well
  const double log_lo = std::log(t_lo);
  const double log_hi = std::log(t_hi);
  int changes = 0;
  bool prev_pos = indifference_rhs(p, rule, t_lo) - p.s > 0.0;
  for (int i = 1; i <= points; ++i) {
    const double t = std::exp(log_lo + (log_hi - log_lo) * i / points);
    const bool pos = indifference_rhs(p, rule, t) - p.s > 0.0;
    if (pos != prev_pos) ++changes;
    prev_pos = pos;
  }
  return changes;
}

}  // namespace

TEST_CASE("single agent: the second jump term vanishes") {
  const ModelParams p = canonical();
  const QuorumRule rule{1.0, 1};
  for (double t : {0.1, 1.0, 3.0}) {
    const double expect = p_good_given_winners(p, 1, 0, t) * 1.0 * (2.0 + 10.0);
    CHECK(indifference_rhs(p, rule, t) == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("indifference value exceeds s near zero and dies off at infinity") {
  const ModelParams p = canonical();
  const QuorumRule rule{0.5, 2};
  CHECK(indifference_rhs(p, rule, 1e-9) > p.s);
  CHECK(std::abs(indifference_rhs(p, rule, 60.0)) < 1e-15);
}

TEST_CASE("single-agent cut-off reduces to pivotal belief = 1/12") {
  const ModelParams p = canonical();
  const CutoffSolution sol = solve_cutoff(p, QuorumRule{1.0, 1});
  // At n = 1 the condition collapses to Pr(good | 0, t) = s / (lambda (z + (g-s)/r))
  CHECK(sol.pivotal_belief == doctest::Approx(1.0 / 12.0).epsilon(1e-9));
  const double oracle = grid_scan_root(p, QuorumRule{1.0, 1});
  CHECK(sol.t_hat == doctest::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("two agents, half quorum: solver matches the grid-scan oracle") {
  const ModelParams p = canonical();
  const QuorumRule rule{0.5, 2};
  const CutoffSolution sol = solve_cutoff(p, rule);
  const double oracle = grid_scan_root(p, rule);
  CHECK(std::abs(sol.t_hat - oracle) < 1e-6);
  CHECK(std::abs(sol.residual) <= 1e-10 * p.s);
  CHECK(sol.bracket_lo <= sol.t_hat);
  CHECK(sol.t_hat <= sol.bracket_hi);
  CHECK(sol.pivotal_belief > 0.0);
  CHECK(sol.pivotal_belief < 1.0);
}

TEST_CASE("large n approaches the limit cut-off") {
  const ModelParams p = canonical();
  const CutoffSolution sol = solve_cutoff(p, QuorumRule{0.5, 10000});
  const double limit = limit_cutoff(p, 0.5);  // myopic branch: ln 4
  CHECK(std::abs(sol.t_hat - limit) < 0.02 * limit);
}

TEST_CASE("solver is deterministic bit for bit") {
  const ModelParams p = canonical();
  const QuorumRule rule{0.3, 37};
  const CutoffSolution a = solve_cutoff(p, rule);
  const CutoffSolution b = solve_cutoff(p, rule);
  CHECK(a.t_hat == b.t_hat);
  CHECK(a.residual == b.residual);
  CHECK(a.bracket_lo == b.bracket_lo);
  CHECK(a.bracket_hi == b.bracket_hi);
  CHECK(a.iterations == b.iterations);
  CHECK(a.pivotal_belief == b.pivotal_belief);
}

TEST_CASE("tolerance is validated") {
  const ModelParams p = canonical();
  CHECK_THROWS_AS(solve_cutoff(p, QuorumRule{0.5, 2}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_cutoff(p, QuorumRule{0.5, 2}, 0.01), std::invalid_argument);
}

TEST_CASE("random rules: monotone where positive, single crossing, tight residual") {
  std::mt19937_64 gen(424242);
  for (int trial = 0; trial < 25; ++trial) {
    const ModelParams p = random_valid_params(gen);
    const double k = 0.05 + 0.95 * std::uniform_real_distribution<double>(0, 1)(gen);
    const int n = 1 + static_cast<int>(gen() % 300);
    const QuorumRule rule{k, n};

    CHECK(sign_changes_on_grid(p, rule, 2048) == 1);

    const CutoffSolution sol = solve_cutoff(p, rule);
    CHECK(std::abs(sol.residual) <= 1e-10 * p.s);

    // strictly decreasing wherever positive, on a coarse grid
    double prev = indifference_rhs(p, rule, 1e-6 / p.lambda);
    for (int i = 1; i <= 200; ++i) {
      const double t = (1e-6 + i * 0.05) / p.lambda * 4.0;
      const double f = indifference_rhs(p, rule, t);
      if (prev > 0.0 && f > 0.0) CHECK(f < prev);
      prev = f;
    }
  }
}

TEST_CASE("comparative static at n = 2000: higher threshold, later cut-off") {
  const ModelParams p = canonical();
  const double t_low = solve_cutoff(p, QuorumRule{0.1, 2000}).t_hat;
  const double t_high = solve_cutoff(p, QuorumRule{0.3, 2000}).t_hat;
  CHECK(t_low < t_high);
}
