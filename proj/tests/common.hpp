#pragma once

#include "expvote/model.hpp"

// Canonical parameter set used across the test suites:
// q0=0.6, rho_h=0.8, rho_l=0.2, lambda=1, r=0.1, s=1, z=2 (so g=2).
// Satisfies every standing assumption with wide margins and produces
// round closed forms (t_bar = ln 4, k_hat = 1/2, k_star = 0.6).
inline expvote::ModelParams canonical() {
  return {0.6, 0.8, 0.2, 1.0, 0.1, 1.0, 2.0};
}
