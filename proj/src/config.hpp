/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "gridworld.hpp"

namespace affectq {

// Full experiment configuration. Defaults follow the evaluation protocol:
// 15x15 grid, start (0,0), goal (6,6), 20 runs of 200 episodes per epsilon
// in 0.1..0.9.
struct SimConfig {
  int width = 15;
  int height = 15;
  GridPos start{0, 0};
  GridPos goal{6, 6};
  double alpha = 0.1;
  double gamma = 0.9;
  double goal_reward = 100.0;
  int episodes = 200;
  int runs = 20;
  std::vector<double> epsilon_list = default_epsilons();
  std::uint64_t master_seed = 1;
  int step_cap = 10000;
  // Norm used before any episode has completed, as a multiple of the
  // optimal step count.
  double bootstrap_norm_factor = 4.0;
  // Worker threads for sweeps; 0 = hardware concurrency. Has no effect on
  // the results.
  int threads = 1;
  // Reuse the run seed across the epsilon axis (epsilon index 0 for every
  // cell), so an epsilon-independent agent repeats exactly per cell.
  bool tie_epsilon_seeds = false;

  static std::vector<double> default_epsilons() {
    std::vector<double> eps;
    for (int i = 1; i <= 9; ++i) eps.push_back(i / 10.0);
    return eps;
  }

  GridWorld make_world() const {
    return GridWorld(width, height, start, goal, goal_reward);
  }

  // Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

}  // namespace affectq
