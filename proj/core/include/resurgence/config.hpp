#pragma once

#include <cstdint>
#include <string>

namespace resurgence {

/// Global run configuration. Loaded from the file named by the
/// RESURGENCE_CONFIG environment variable (when set), then overridden by
/// CLI flags. The seed is recorded in every emitted artifact so runs can
/// be reproduced bit for bit.
struct RunConfig {
  int truncation = 64;          // Taylor truncation order N
  double ode_dt = 1.0 / 256.0;  // RK4 step in flow time
  double ode_tol = 1e-9;        // invariant tolerance for step halving
  int quad_m0 = 8;              // initial simplex lattice resolution
  int quad_max_m = 256;         // refinement cap
  double quad_tol = 1e-8;       // Richardson convergence target
  int sampler_rays = 64;        // straight-ray directions in the boundary sampler
  double sampler_grid = 0.0;    // sampler/planner grid spacing; 0 = auto from delta
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = hardware concurrency
  std::string out_dir = ".";

  void validate() const;
};

/// RunConfig from RESURGENCE_CONFIG (if set) or defaults.
RunConfig load_config_from_env();

/// RunConfig from a JSON file (RunConfig schema `runconfig.v1`).
RunConfig load_config(const std::string& path);

}  // namespace resurgence
