#include "expvote/simulate.hpp"

#include <cmath>
#include <limits>
#include <thread>

#include "expvote/asymptotics.hpp"
#include "expvote/equilibrium.hpp"
#include "expvote/rng.hpp"

namespace expvote {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void fill_world(WorldDraw& w, const ModelParams& p, int n, State state,
                std::uint64_t seed, std::uint64_t replicate) {
  w.state = state;
  w.seed = seed;
  w.replicate = replicate;
  w.good.resize(n);
  w.first_arrival.resize(n);
  const double rho = p.rho(state);
  for (int i = 0; i < n; ++i) {
    const auto agent = static_cast<std::uint64_t>(i);
    const bool good =
        to_unit(stream_draw(stream_key(seed, kPurposeType, replicate, agent), 0)) < rho;
    w.good[i] = good ? 1 : 0;
    if (good) {
      const double u =
          to_unit(stream_draw(stream_key(seed, kPurposeArrival, replicate, agent), 0));
      w.first_arrival[i] = -std::log(u) / p.lambda;
    } else {
      w.first_arrival[i] = kInf;
    }
  }
}

State draw_state(const ModelParams& p, std::uint64_t seed, std::uint64_t replicate) {
  const auto key = stream_key(seed, kPurposeState, replicate, 0);
  return to_unit(stream_draw(key, 0)) < p.q0 ? State::H : State::L;
}

int count_good(const WorldDraw& w) {
  int c = 0;
  for (std::uint8_t g : w.good) c += g;
  return c;
}

// Expected discounted payoff per agent given the decided branch: good types
// collect g-flow in expectation while R runs on [0, horizon), then either R
// continues forever (paying good types only) or S pays everyone.
double per_capita_payoff(const ModelParams& p, int n_good, int n, double horizon,
                         bool r_forever) {
  const double g = p.g();
  const double disc = std::exp(-p.r * horizon);
  const double share_good = static_cast<double>(n_good) / n;
  double pay = share_good * g / p.r * (1.0 - disc);
  if (r_forever)
    pay += share_good * g / p.r * disc;
  else
    pay += p.s / p.r * disc;
  return pay;
}

struct StratumCounts {
  long long hits = 0;
};

// Runs `replicates` forced-state worlds on `threads` workers and counts how
// many satisfy `event`. Counter-based streams keyed by the replicate index
// make the tally independent of the partition.
template <typename EventFn>
long long count_events(const ModelParams& p, int n, State forced,
                       long long replicates, std::uint64_t seed, int threads,
                       EventFn event) {
  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (static_cast<long long>(workers) > replicates)
    workers = static_cast<int>(replicates);

  std::vector<long long> counts(workers, 0);
  auto run_chunk = [&](int w, long long begin, long long end) {
    WorldDraw world;
    long long local = 0;
    for (long long rep = begin; rep < end; ++rep) {
      fill_world(world, p, n, forced, seed, static_cast<std::uint64_t>(rep));
      if (event(world)) ++local;
    }
    counts[w] = local;
  };

  if (workers == 1) {
    run_chunk(0, 0, replicates);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const long long chunk = (replicates + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const long long begin = w * chunk;
      const long long end = std::min(replicates, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_chunk, w, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  long long total = 0;
  for (long long c : counts) total += c;
  return total;
}

}  // namespace

WorldDraw draw_world(const ModelParams& p, int n, std::uint64_t seed,
                     std::uint64_t replicate) {
  if (n < 1) throw std::invalid_argument("draw_world: n must be >= 1");
  WorldDraw w;
  fill_world(w, p, n, draw_state(p, seed, replicate), seed, replicate);
  return w;
}

WorldDraw draw_world_in_state(const ModelParams& p, int n, State state,
                              std::uint64_t seed, std::uint64_t replicate) {
  if (n < 1) throw std::invalid_argument("draw_world_in_state: n must be >= 1");
  WorldDraw w;
  fill_world(w, p, n, state, seed, replicate);
  return w;
}

int winners_at(const WorldDraw& world, double t) {
  if (!(t >= 0.0)) throw std::domain_error("winners_at: t must be >= 0");
  int c = 0;
  for (double a : world.first_arrival)
    if (a <= t) ++c;
  return c;
}

GameOutcome run_irreversible(const ModelParams& p, const QuorumRule& rule,
                             double cutoff, const WorldDraw& world) {
  if (!(cutoff >= 0.0)) throw std::domain_error("run_irreversible: cutoff must be >= 0");
  GameOutcome out{};
  out.state = world.state;
  out.winners_at_cutoff = winners_at(world, cutoff);
  const bool r_forever = out.winners_at_cutoff >= rule.quorum();
  out.implemented_after = r_forever ? Implemented::RForever : Implemented::SForever;
  out.aggregated_correctly = r_forever == (world.state == State::H);
  out.per_capita_payoff =
      per_capita_payoff(p, count_good(world), world.n(), cutoff, r_forever);
  out.stopped_at_t1 = false;
  return out;
}

GameOutcome run_reversible_constructed(const ModelParams& p, const QuorumRule& rule,
                                       double t1, double cutoff,
                                       const WorldDraw& world) {
  if (!(t1 > 0.0) || !(t1 < cutoff))
    throw InvalidT1("run_reversible_constructed: need 0 < t1 < cutoff");
  if (winners_at(world, t1) == 0) {
    GameOutcome out{};
    out.state = world.state;
    out.winners_at_cutoff = 0;
    out.implemented_after = Implemented::SForever;
    out.aggregated_correctly = world.state == State::L;
    out.per_capita_payoff =
        per_capita_payoff(p, count_good(world), world.n(), t1, false);
    out.stopped_at_t1 = true;
    return out;
  }
  return run_irreversible(p, rule, cutoff, world);
}

Implemented first_best_outcome(const WorldDraw& world, const ModelParams& p) {
  const double total_risky = count_good(world) * p.g();
  const double total_safe = world.n() * p.s;
  return total_risky >= total_safe ? Implemented::RForever : Implemented::SForever;
}

AggregationEstimate estimate_aggregation(const ModelParams& p, const QuorumRule& rule,
                                         double cutoff, long long replicates,
                                         std::uint64_t seed, int threads) {
  if (replicates < 1)
    throw std::invalid_argument("estimate_aggregation: replicates must be >= 1");
  const int m = rule.quorum();
  const long long hits_h =
      count_events(p, rule.n, State::H, replicates, seed, threads,
                   [&](const WorldDraw& w) { return winners_at(w, cutoff) >= m; });
  const long long hits_l =
      count_events(p, rule.n, State::L, replicates, seed, threads,
                   [&](const WorldDraw& w) { return winners_at(w, cutoff) < m; });

  const double arrived = -std::expm1(-p.lambda * cutoff);
  AggregationEstimate est{};
  est.k = rule.k;
  est.n = rule.n;
  est.cutoff_used = cutoff;
  est.replicates = replicates;
  est.p_agg_h = static_cast<double>(hits_h) / replicates;
  est.p_agg_l = static_cast<double>(hits_l) / replicates;
  est.ci_h = wilson95(hits_h, replicates);
  est.ci_l = wilson95(hits_l, replicates);
  est.oracle_h = binomial_tail_geq(rule.n, p.rho_h * arrived, m);
  est.oracle_l = 1.0 - binomial_tail_geq(rule.n, p.rho_l * arrived, m);
  return est;
}

std::vector<ConvergenceRow> convergence_study(const ModelParams& p, double k,
                                              const std::vector<int>& n_list,
                                              long long replicates,
                                              std::uint64_t seed, double tol,
                                              int threads) {
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw std::invalid_argument("convergence_study: n_list must be increasing");

  const double limit = limit_cutoff(p, k);
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    const QuorumRule rule{k, n};
    const CutoffSolution sol = solve_cutoff(p, rule, tol);
    ConvergenceRow row;
    row.n = n;
    row.t_hat_kn = sol.t_hat;
    row.gap = std::abs(sol.t_hat - limit);
    row.agg = estimate_aggregation(p, rule, sol.t_hat, replicates, seed, threads);
    rows.push_back(row);
  }
  return rows;
}

ReversibleEstimate estimate_reversible(const ModelParams& p, const QuorumRule& rule,
                                       double t1, double cutoff, long long replicates,
                                       std::uint64_t seed, int threads) {
  if (replicates < 1)
    throw std::invalid_argument("estimate_reversible: replicates must be >= 1");
  if (!(t1 > 0.0) || !(t1 < cutoff))
    throw InvalidT1("estimate_reversible: need 0 < t1 < cutoff");

  auto s_forever = [&](const WorldDraw& w) {
    return run_reversible_constructed(p, rule, t1, cutoff, w).implemented_after ==
           Implemented::SForever;
  };
  const long long hits_h =
      count_events(p, rule.n, State::H, replicates, seed, threads, s_forever);
  const long long hits_l =
      count_events(p, rule.n, State::L, replicates, seed, threads, s_forever);

  ReversibleEstimate est{};
  est.k = rule.k;
  est.n = rule.n;
  est.t1 = t1;
  est.cutoff = cutoff;
  est.replicates = replicates;
  est.p_s_forever_h = static_cast<double>(hits_h) / replicates;
  est.p_s_forever_l = static_cast<double>(hits_l) / replicates;
  est.ci_h = wilson95(hits_h, replicates);
  est.ci_l = wilson95(hits_l, replicates);
  est.lower_bound_h = prob_no_winner(p, State::H, t1, rule.n);
  return est;
}

}  // namespace expvote
