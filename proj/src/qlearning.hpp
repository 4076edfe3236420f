/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <vector>

#include "gridworld.hpp"
#include "rng.hpp"

namespace affectq {

struct LearningParams {
  double alpha = 0.1;    // learning rate, (0, 1]
  double gamma = 0.9;    // discount factor, [0, 1)
  double epsilon = 0.1;  // exploration probability, [0, 1]
};

// Throws std::invalid_argument when a parameter is out of range.
void validate(const LearningParams& params);

// Dense state-action value table; every entry starts at 0.
class QTable {
 public:
  QTable(int width, int height);

  double value(GridPos s, Action a) const { return values_[index(s, a)]; }
  void set(GridPos s, Action a, double v) { values_[index(s, a)] = v; }
  double max_value(GridPos s) const;

  int width() const { return width_; }
  int height() const { return height_; }

 private:
  std::size_t index(GridPos s, Action a) const;

  int width_;
  int height_;
  std::vector<double> values_;
};

// One temporal-difference backup:
//   Q(s,a) += alpha * (r + gamma * max_b Q(s',b) - Q(s,a))
// Only the (s,a) entry changes. Returns the updated value.
double td_update(QTable& q, GridPos s, Action a, double reward, GridPos s_next,
                 const LearningParams& params);

// Argmax over the four actions; exact-value ties are broken uniformly at
// random among the tied actions (the rng is consumed only when more than
// one action is tied).
Action greedy_action(const QTable& q, GridPos s, SplitMix64& rng);

// With probability epsilon a uniform random action (possibly the greedy
// one), otherwise greedy_action. `explored` reports which branch was taken.
Action epsilon_greedy(const QTable& q, GridPos s, const LearningParams& params,
                      SplitMix64& rng, bool* explored = nullptr);

}  // namespace affectq
