#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "expvote/model.hpp"

namespace harness {

// Resolved run configuration: canonical defaults, overridden by the config
// file, overridden by command-line flags. The echo() lines below are the
// canonical serialized form recorded (and hashed) in every manifest.
struct RunConfig {
  expvote::ModelParams params{0.6, 0.8, 0.2, 1.0, 0.1, 1.0, 2.0};
  double k = 0.5;
  int n = 100;
  std::uint64_t seed = 1;
  long long replicates = 10000;
  double tol = 1e-10;
  double t1 = 0.0;  // 0 = auto: half the solved cut-off
  std::vector<int> n_list = {100, 1000, 10000};
  int grid_points = 400;  // sweep grid k_i = i/grid_points, i = 1..grid_points
  bool svg = false;
  std::string out_dir = "out";
  int threads = 0;  // 0 = hardware concurrency; never affects results
};

// Canonical key=value lines for the manifest. Execution details that cannot
// change results (output directory, worker count) are left out.
std::vector<std::string> config_echo(const RunConfig& cfg);

}  // namespace harness
