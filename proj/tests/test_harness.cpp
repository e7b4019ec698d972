// End-to-end checks of the command-line tool: exit codes, pinned CSV
// schemas, manifests, and byte-level determinism.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "doctest.h"
#include "harness/config.hpp"
#include "harness/output.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kRoot = fs::path("tmp_harness");

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + EXPVOTE_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string nth_line(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  for (int i = 0; i <= n; ++i)
    if (!std::getline(in, line)) return "";
  return line;
}

// filename -> hex hash from the [outputs] section
std::map<std::string, std::string> manifest_outputs(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  bool in_outputs = false;
  while (std::getline(in, line)) {
    if (line == "[outputs]") {
      in_outputs = true;
      continue;
    }
    if (!in_outputs || line.empty()) continue;
    const auto eq = line.find(" = fnv1a64:");
    if (eq == std::string::npos) continue;
    out[line.substr(0, eq)] = line.substr(eq + 11);
  }
  return out;
}

struct DirGuard {
  DirGuard() {
    fs::remove_all(kRoot);
    fs::create_directories(kRoot);
  }
};

std::string dir(const std::string& name) { return (kRoot / name).string(); }

}  // namespace

TEST_CASE("exit codes: validate") {
  DirGuard g;
  CHECK(run_cli("validate --out " + dir("v0")) == 0);
  CHECK(run_cli("validate --q0 0.4 --out " + dir("v1")) == 2);
  const std::string report = slurp(kRoot / "v1" / "validate.txt");
  CHECK(report.find("Assumption2Violated") != std::string::npos);
  CHECK(report.find("overall: invalid") != std::string::npos);
}

TEST_CASE("exit codes: parse failures") {
  DirGuard g;
  CHECK(run_cli("") == 1);                       // missing subcommand
  CHECK(run_cli("no-such-command") == 1);
  CHECK(run_cli("solve --no-such-flag 1") == 1);
  std::ofstream(kRoot / "bad.cfg") << "bogus_key = 1\n";
  CHECK(run_cli("--config " + dir("bad.cfg") + " solve --out " + dir("x")) == 1);
  CHECK(run_cli("--config " + dir("missing.cfg") + " solve") == 1);
  // t1 = 0 is rejected at parse time
  CHECK(run_cli("reversible --t1 0 --out " + dir("x")) == 1);
}

TEST_CASE("exit codes: computation failures surface as 3") {
  DirGuard g;
  CHECK(run_cli("reversible --k 0.5 --n 5 --t1 99 --replicates 100 --out " +
                dir("rbad")) == 3);
}

TEST_CASE("assumption violations stop every command with exit 2") {
  DirGuard g;
  CHECK(run_cli("solve --q0 0.4 --out " + dir("s")) == 2);
  CHECK(run_cli("sweep --rho-h 0.1 --rho-l 0.5 --out " + dir("w")) == 2);
}

TEST_CASE("config file fills values, flags win") {
  DirGuard g;
  std::ofstream(kRoot / "run.cfg") << "k=0.3\nn=5\nseed=9\nq0=0.7\n";
  CHECK(run_cli("--config " + dir("run.cfg") + " solve --k 0.25 --out " + dir("cfg")) ==
        0);
  const std::string csv = slurp(kRoot / "cfg" / "solve.csv");
  CHECK(nth_line(csv, 1).substr(0, 7) == "0.25,5,");  // k from flag, n from file
  const std::string manifest = slurp(kRoot / "cfg" / "manifest.txt");
  CHECK(manifest.find("q0 = 0.7") != std::string::npos);
  CHECK(manifest.find("seed = 9") != std::string::npos);
}

TEST_CASE("CSV schemas are pinned") {
  DirGuard g;
  REQUIRE(run_cli("solve --out " + dir("a")) == 0);
  CHECK(nth_line(slurp(kRoot / "a" / "solve.csv"), 0) ==
        "k,n,m,tol,t_hat,residual,bracket_lo,bracket_hi,iterations,pivotal_belief");

  REQUIRE(run_cli("sweep --grid 16 --out " + dir("b")) == 0);
  const std::string fig1 = slurp(kRoot / "b" / "fig1.csv");
  CHECK(nth_line(fig1, 0).substr(0, 8) == "# k_bar ");
  CHECK(nth_line(fig1, 1).substr(0, 9) == "# k_star ");
  CHECK(nth_line(fig1, 2) == "k,t_hat_k,branch");
  const std::string fig2 = slurp(kRoot / "b" / "fig2.csv");
  CHECK(nth_line(fig2, 2) == "k,frac_h,frac_l,diag");

  REQUIRE(run_cli("converge --k 0.25 --n-list 10,20 --replicates 100 --out " +
                  dir("c")) == 0);
  CHECK(nth_line(slurp(kRoot / "c" / "converge.csv"), 2) ==
        "n,t_hat_kn,gap,p_agg_h,ci_h_lo,ci_h_hi,oracle_h,p_agg_l,ci_l_lo,ci_l_hi,"
        "oracle_l");

  REQUIRE(run_cli("simulate --k 0.5 --n 40 --replicates 200 --out " + dir("d")) == 0);
  CHECK(nth_line(slurp(kRoot / "d" / "simulate.csv"), 0) ==
        "k,n,cutoff,replicates,p_agg_h,ci_h_lo,ci_h_hi,oracle_h,p_agg_l,ci_l_lo,"
        "ci_l_hi,oracle_l");

  REQUIRE(run_cli("reversible --k 0.5 --n 10 --replicates 200 --out " + dir("e")) == 0);
  const std::string rev = slurp(kRoot / "e" / "reversible.csv");
  CHECK(nth_line(rev, 0) ==
        "k,n,t1,cutoff,replicates,p_s_forever_h,ci_h_lo,ci_h_hi,lower_bound_h,"
        "p_s_forever_l,ci_l_lo,ci_l_hi");
  // without --t1 the probe defaults to half the solved cut-off
  {
    std::istringstream row(nth_line(rev, 1));
    std::string cell;
    std::getline(row, cell, ',');  // k
    std::getline(row, cell, ',');  // n
    std::getline(row, cell, ',');
    const double t1 = std::stod(cell);
    std::getline(row, cell, ',');
    const double cutoff = std::stod(cell);
    CHECK(t1 == doctest::Approx(0.5 * cutoff).epsilon(1e-12));
  }
}

TEST_CASE("identical config and seed reproduce identical CSV bytes") {
  DirGuard g;
  const std::string flags = "simulate --k 0.52 --n 80 --replicates 500 --seed 77 ";
  REQUIRE(run_cli(flags + "--threads 1 --out " + dir("r1")) == 0);
  REQUIRE(run_cli(flags + "--threads 3 --out " + dir("r2")) == 0);
  REQUIRE(run_cli(flags + "--threads 3 --out " + dir("r3")) == 0);
  const std::string a = slurp(kRoot / "r1" / "simulate.csv");
  CHECK(a == slurp(kRoot / "r2" / "simulate.csv"));
  CHECK(a == slurp(kRoot / "r3" / "simulate.csv"));

  REQUIRE(run_cli("solve --k 0.37 --n 41 --out " + dir("s1")) == 0);
  REQUIRE(run_cli("solve --k 0.37 --n 41 --out " + dir("s2")) == 0);
  CHECK(slurp(kRoot / "s1" / "solve.csv") == slurp(kRoot / "s2" / "solve.csv"));

  REQUIRE(run_cli("sweep --grid 32 --out " + dir("w1")) == 0);
  REQUIRE(run_cli("sweep --grid 32 --out " + dir("w2")) == 0);
  CHECK(slurp(kRoot / "w1" / "fig1.csv") == slurp(kRoot / "w2" / "fig1.csv"));
  CHECK(slurp(kRoot / "w1" / "fig2.csv") == slurp(kRoot / "w2" / "fig2.csv"));
}

TEST_CASE("manifest lists every output with a matching hash") {
  DirGuard g;
  REQUIRE(run_cli("sweep --grid 12 --svg --out " + dir("m")) == 0);
  const std::string manifest = slurp(kRoot / "m" / "manifest.txt");
  const auto outputs = manifest_outputs(manifest);
  REQUIRE(outputs.size() == 4);  // fig1.csv fig2.csv fig1.svg fig2.svg
  for (const auto& [name, hex] : outputs) {
    const std::string content = slurp(kRoot / "m" / name);
    CHECK(harness::hash_hex(harness::fnv1a64(content)) == hex);
  }
  // every file in the directory except the manifest itself is listed
  for (const auto& entry : fs::directory_iterator(kRoot / "m")) {
    const std::string name = entry.path().filename().string();
    if (name == "manifest.txt") continue;
    CHECK(outputs.count(name) == 1);
  }
  CHECK(manifest.find("command = sweep") != std::string::npos);
  CHECK(manifest.find("config-hash = fnv1a64:") != std::string::npos);
}

TEST_CASE("svg charts are emitted only on request and are self-contained") {
  DirGuard g;
  REQUIRE(run_cli("sweep --grid 12 --out " + dir("nosvg")) == 0);
  CHECK(!fs::exists(kRoot / "nosvg" / "fig1.svg"));
  REQUIRE(run_cli("sweep --grid 12 --svg --out " + dir("svg")) == 0);
  const std::string svg = slurp(kRoot / "svg" / "fig2.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("k_star") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
}

TEST_CASE("sweep metadata comments carry the thresholds") {
  DirGuard g;
  REQUIRE(run_cli("sweep --grid 40 --out " + dir("meta")) == 0);
  const std::string fig2 = slurp(kRoot / "meta" / "fig2.csv");
  CHECK(nth_line(fig2, 0) == "# k_bar = 0.352218924459");
  CHECK(nth_line(fig2, 1) == "# k_star = 0.6");
}
