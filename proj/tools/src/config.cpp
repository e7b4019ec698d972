#include "harness/config.hpp"

#include "harness/output.hpp"

namespace harness {

std::vector<std::string> config_echo(const RunConfig& cfg) {
  std::vector<std::string> lines;
  auto put = [&](const std::string& key, const std::string& value) {
    lines.push_back(key + " = " + value);
  };
  put("q0", fmt12(cfg.params.q0));
  put("rho-h", fmt12(cfg.params.rho_h));
  put("rho-l", fmt12(cfg.params.rho_l));
  put("lambda", fmt12(cfg.params.lambda));
  put("r", fmt12(cfg.params.r));
  put("s", fmt12(cfg.params.s));
  put("z", fmt12(cfg.params.z));
  put("k", fmt12(cfg.k));
  put("n", std::to_string(cfg.n));
  put("seed", std::to_string(cfg.seed));
  put("replicates", std::to_string(cfg.replicates));
  put("tol", fmt12(cfg.tol));
  put("t1", cfg.t1 > 0.0 ? fmt12(cfg.t1) : "auto");
  std::string nl;
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    if (i) nl += ',';
    nl += std::to_string(cfg.n_list[i]);
  }
  put("n-list", nl);
  put("grid", std::to_string(cfg.grid_points));
  put("svg", cfg.svg ? "true" : "false");
  return lines;
}

}  // namespace harness
