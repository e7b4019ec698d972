#include "harness/commands.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "expvote/asymptotics.hpp"
#include "expvote/equilibrium.hpp"
#include "expvote/simulate.hpp"
#include "harness/output.hpp"
#include "harness/svg.hpp"

namespace harness {

using namespace expvote;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Manifest start_manifest(const RunConfig& cfg, const std::string& command) {
  Manifest m;
  m.command = command;
  m.config_lines = config_echo(cfg);
  return m;
}

std::vector<std::string> ci_cells(const Interval& ci) {
  return {fmt12(ci.lo), fmt12(ci.hi)};
}

}  // namespace

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const Stopwatch watch;
  const ModelParams& p = cfg.params;
  const double g = p.g();

  std::string report;
  bool all_ok = true;
  auto check = [&](const std::string& name, Violation tag, bool ok,
                   const std::string& detail) {
    report += (ok ? "pass  " : "FAIL  ") + name;
    if (!ok) report += std::string("  [") + violation_name(tag) + "]";
    if (!detail.empty()) report += "  (" + detail + ")";
    report += '\n';
    all_ok = all_ok && ok;
  };

  check("q0 in (0,1)", Violation::PriorOutOfRange,
        std::isfinite(p.q0) && p.q0 > 0.0 && p.q0 < 1.0, "q0 = " + fmt12(p.q0));
  check("0 < rho_l < rho_h < 1", Violation::TypeProbOrder,
        std::isfinite(p.rho_l) && std::isfinite(p.rho_h) && p.rho_l > 0.0 &&
            p.rho_h > p.rho_l && p.rho_h < 1.0,
        "rho_l = " + fmt12(p.rho_l) + ", rho_h = " + fmt12(p.rho_h));
  check("lambda, r, s, z > 0", Violation::NonpositiveRate,
        std::isfinite(p.lambda) && p.lambda > 0.0 && std::isfinite(p.r) && p.r > 0.0 &&
            std::isfinite(p.s) && p.s > 0.0 && std::isfinite(p.z) && p.z > 0.0,
        "lambda = " + fmt12(p.lambda) + ", r = " + fmt12(p.r) + ", s = " + fmt12(p.s) +
            ", z = " + fmt12(p.z));
  check("rho_h*g > s", Violation::Assumption1Violated, p.rho_h * g > p.s,
        "margin = " + fmt12(p.rho_h * g - p.s));
  check("s > rho_l*g", Violation::Assumption1Violated, p.s > p.rho_l * g,
        "margin = " + fmt12(p.s - p.rho_l * g));
  const double mix = p.q0 * p.rho_h * g + (1.0 - p.q0) * p.rho_l * g;
  check("q0*rho_h*g + (1-q0)*rho_l*g > s", Violation::Assumption2Violated, mix > p.s,
        "margin = " + fmt12(mix - p.s));
  report += std::string("overall: ") + (all_ok ? "valid" : "invalid") + "\n";

  Manifest manifest = start_manifest(cfg, "validate");
  emit_file(cfg.out_dir, "validate.txt", report, manifest);
  manifest.elapsed_seconds = watch.seconds();
  write_manifest(cfg.out_dir, manifest);

  out << report;
  return all_ok ? kExitOk : kExitAssumptions;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Stopwatch watch;
  const ModelParams p = validate(cfg.params);
  const QuorumRule rule{cfg.k, cfg.n};
  const CutoffSolution sol = solve_cutoff(p, rule, cfg.tol);

  CsvBuilder csv;
  csv.header({"k", "n", "m", "tol", "t_hat", "residual", "bracket_lo", "bracket_hi",
              "iterations", "pivotal_belief"});
  csv.row({fmt12(cfg.k), std::to_string(cfg.n), std::to_string(rule.quorum()),
           fmt12(cfg.tol), fmt12(sol.t_hat), fmt12(sol.residual), fmt12(sol.bracket_lo),
           fmt12(sol.bracket_hi), std::to_string(sol.iterations),
           fmt12(sol.pivotal_belief)});

  Manifest manifest = start_manifest(cfg, "solve");
  emit_file(cfg.out_dir, "solve.csv", csv.str(), manifest);
  manifest.elapsed_seconds = watch.seconds();
  write_manifest(cfg.out_dir, manifest);

  out << "t_hat(k=" << fmt12(cfg.k) << ", n=" << cfg.n << ") = " << fmt12(sol.t_hat)
      << "\nresidual = " << fmt12(sol.residual)
      << "\npivotal belief = " << fmt12(sol.pivotal_belief)
      << "\niterations = " << sol.iterations << "\n";
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const Stopwatch watch;
  const ModelParams p = validate(cfg.params);
  if (cfg.grid_points < 2)
    throw std::invalid_argument("sweep: grid must have at least 2 points");

  const double t_bar = myopic_cutoff(p);
  const double kb = k_bar(p);
  const double ks = aggregation_threshold(p);

  CsvBuilder fig1;
  fig1.comment("k_bar = " + fmt12(kb));
  fig1.comment("k_star = " + fmt12(ks));
  fig1.header({"k", "t_hat_k", "branch"});
  CsvBuilder fig2;
  fig2.comment("k_bar = " + fmt12(kb));
  fig2.comment("k_star = " + fmt12(ks));
  fig2.header({"k", "frac_h", "frac_l", "diag"});

  Series cutoff_series{"t_hat_k", "blue", {}};
  Series frac_h_series{"winners in H", "red", {}};
  Series frac_l_series{"winners in L", "green", {}};
  Series diag_series{"45-degree line", "blue", {}};

  for (int i = 1; i <= cfg.grid_points; ++i) {
    const double k = static_cast<double>(i) / cfg.grid_points;
    const double t_hat = limit_cutoff(p, k);
    const double x = limit_arrival_fraction(p, k);
    const double fh = p.rho_h * x;
    const double fl = p.rho_l * x;
    fig1.row({fmt12(k), fmt12(t_hat), k < kb ? "interior" : "myopic"});
    fig2.row({fmt12(k), fmt12(fh), fmt12(fl), fmt12(k)});
    cutoff_series.points.emplace_back(k, t_hat);
    frac_h_series.points.emplace_back(k, fh);
    frac_l_series.points.emplace_back(k, fl);
    diag_series.points.emplace_back(k, k);
  }

  Manifest manifest = start_manifest(cfg, "sweep");
  emit_file(cfg.out_dir, "fig1.csv", fig1.str(), manifest);
  emit_file(cfg.out_dir, "fig2.csv", fig2.str(), manifest);
  if (cfg.svg) {
    emit_file(cfg.out_dir, "fig1.svg",
              line_chart_svg({"limit cut-off vs threshold", "k", "t_hat_k",
                              {cutoff_series},
                              {{kb, "k_bar"}}}),
              manifest);
    emit_file(cfg.out_dir, "fig2.svg",
              line_chart_svg({"limit winner fractions vs threshold", "k", "fraction",
                              {frac_h_series, frac_l_series, diag_series},
                              {{kb, "k_bar"}, {ks, "k_star"}}}),
              manifest);
  }
  manifest.elapsed_seconds = watch.seconds();
  write_manifest(cfg.out_dir, manifest);

  out << "sweep over " << cfg.grid_points << " thresholds\n"
      << "t_bar = " << fmt12(t_bar) << "\nk_bar = " << fmt12(kb)
      << "\nk_star = " << fmt12(ks) << "\n";
  return kExitOk;
}

int cmd_converge(const RunConfig& cfg, std::ostream& out) {
  const Stopwatch watch;
  const ModelParams p = validate(cfg.params);
  const double limit = limit_cutoff(p, cfg.k);
  const auto rows = convergence_study(p, cfg.k, cfg.n_list, cfg.replicates, cfg.seed,
                                      cfg.tol, cfg.threads);

  CsvBuilder csv;
  csv.comment("k = " + fmt12(cfg.k));
  csv.comment("limit_cutoff = " + fmt12(limit));
  csv.header({"n", "t_hat_kn", "gap", "p_agg_h", "ci_h_lo", "ci_h_hi", "oracle_h",
              "p_agg_l", "ci_l_lo", "ci_l_hi", "oracle_l"});
  for (const auto& row : rows) {
    std::vector<std::string> cells{std::to_string(row.n), fmt12(row.t_hat_kn),
                                   fmt12(row.gap), fmt12(row.agg.p_agg_h)};
    for (const auto& c : ci_cells(row.agg.ci_h)) cells.push_back(c);
    cells.push_back(fmt12(row.agg.oracle_h));
    cells.push_back(fmt12(row.agg.p_agg_l));
    for (const auto& c : ci_cells(row.agg.ci_l)) cells.push_back(c);
    cells.push_back(fmt12(row.agg.oracle_l));
    csv.row(cells);
  }

  Manifest manifest = start_manifest(cfg, "converge");
  emit_file(cfg.out_dir, "converge.csv", csv.str(), manifest);
  manifest.elapsed_seconds = watch.seconds();
  write_manifest(cfg.out_dir, manifest);

  out << "limit cut-off at k=" << fmt12(cfg.k) << " is " << fmt12(limit) << "\n";
  for (const auto& row : rows)
    out << "n=" << row.n << "  t_hat=" << fmt12(row.t_hat_kn)
        << "  gap=" << fmt12(row.gap) << "  p_agg_h=" << fmt12(row.agg.p_agg_h)
        << "  p_agg_l=" << fmt12(row.agg.p_agg_l) << "\n";
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const Stopwatch watch;
  const ModelParams p = validate(cfg.params);
  const QuorumRule rule{cfg.k, cfg.n};
  const CutoffSolution sol = solve_cutoff(p, rule, cfg.tol);
  const AggregationEstimate est = estimate_aggregation(
      p, rule, sol.t_hat, cfg.replicates, cfg.seed, cfg.threads);

  CsvBuilder csv;
  csv.header({"k", "n", "cutoff", "replicates", "p_agg_h", "ci_h_lo", "ci_h_hi",
              "oracle_h", "p_agg_l", "ci_l_lo", "ci_l_hi", "oracle_l"});
  std::vector<std::string> cells{fmt12(est.k), std::to_string(est.n),
                                 fmt12(est.cutoff_used), std::to_string(est.replicates),
                                 fmt12(est.p_agg_h)};
  for (const auto& c : ci_cells(est.ci_h)) cells.push_back(c);
  cells.push_back(fmt12(est.oracle_h));
  cells.push_back(fmt12(est.p_agg_l));
  for (const auto& c : ci_cells(est.ci_l)) cells.push_back(c);
  cells.push_back(fmt12(est.oracle_l));
  csv.row(cells);

  Manifest manifest = start_manifest(cfg, "simulate");
  emit_file(cfg.out_dir, "simulate.csv", csv.str(), manifest);
  manifest.elapsed_seconds = watch.seconds();
  write_manifest(cfg.out_dir, manifest);

  out << "cutoff t_hat = " << fmt12(sol.t_hat) << "\n"
      << "Pr(R prevails | H): estimate " << fmt12(est.p_agg_h) << "  CI ["
      << fmt12(est.ci_h.lo) << ", " << fmt12(est.ci_h.hi) << "]  exact "
      << fmt12(est.oracle_h) << "\n"
      << "Pr(S prevails | L): estimate " << fmt12(est.p_agg_l) << "  CI ["
      << fmt12(est.ci_l.lo) << ", " << fmt12(est.ci_l.hi) << "]  exact "
      << fmt12(est.oracle_l) << "\n";
  return kExitOk;
}

int cmd_reversible(const RunConfig& cfg, std::ostream& out) {
  const Stopwatch watch;
  const ModelParams p = validate(cfg.params);
  const QuorumRule rule{cfg.k, cfg.n};
  const CutoffSolution sol = solve_cutoff(p, rule, cfg.tol);
  const double t1 = cfg.t1 > 0.0 ? cfg.t1 : 0.5 * sol.t_hat;
  const ReversibleEstimate est = estimate_reversible(
      p, rule, t1, sol.t_hat, cfg.replicates, cfg.seed, cfg.threads);

  CsvBuilder csv;
  csv.header({"k", "n", "t1", "cutoff", "replicates", "p_s_forever_h", "ci_h_lo",
              "ci_h_hi", "lower_bound_h", "p_s_forever_l", "ci_l_lo", "ci_l_hi"});
  std::vector<std::string> cells{fmt12(est.k),      std::to_string(est.n),
                                 fmt12(est.t1),     fmt12(est.cutoff),
                                 std::to_string(est.replicates),
                                 fmt12(est.p_s_forever_h)};
  for (const auto& c : ci_cells(est.ci_h)) cells.push_back(c);
  cells.push_back(fmt12(est.lower_bound_h));
  cells.push_back(fmt12(est.p_s_forever_l));
  for (const auto& c : ci_cells(est.ci_l)) cells.push_back(c);
  csv.row(cells);

  Manifest manifest = start_manifest(cfg, "reversible");
  emit_file(cfg.out_dir, "reversible.csv", csv.str(), manifest);
  manifest.elapsed_seconds = watch.seconds();
  write_manifest(cfg.out_dir, manifest);

  const bool excludes_zero = est.ci_h.lo > 0.0;
  const bool above_bound = est.p_s_forever_h >= est.lower_bound_h;
  out << "probe t1 = " << fmt12(t1) << ", cutoff = " << fmt12(sol.t_hat) << "\n"
      << "Pr(S forever | H): estimate " << fmt12(est.p_s_forever_h) << "  CI ["
      << fmt12(est.ci_h.lo) << ", " << fmt12(est.ci_h.hi) << "]\n"
      << "Pr(S forever | L): estimate " << fmt12(est.p_s_forever_l) << "  CI ["
      << fmt12(est.ci_l.lo) << ", " << fmt12(est.ci_l.hi) << "]\n"
      << "exact no-winner-by-t1 bound in H = " << fmt12(est.lower_bound_h) << "\n"
      << "H-state CI excludes zero: " << (excludes_zero ? "yes" : "no") << "\n"
      << "estimate >= exact bound: " << (above_bound ? "yes" : "no") << "\n";
  return kExitOk;
}

}  // namespace harness
