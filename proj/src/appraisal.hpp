/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "gridworld.hpp"

namespace affectq {

enum class Emotion : int { Joy = 0, Sadness = 1, Anger = 2, Fear = 3 };

inline constexpr std::array<Emotion, 4> kAllEmotions{
    Emotion::Joy, Emotion::Sadness, Emotion::Anger, Emotion::Fear};

const char* to_string(Emotion e);

// y = a * t^b
struct PowerFit {
  double a;
  double b;
  double eval(double t) const { return a * std::pow(t, b); }
};

// Ordinary least squares on (ln t, ln y) for t = 1..n. Requires at least
// two entries, all > 0.
PowerFit fit_power_regression(std::span<const double> history);

// Step-count overload; entries must be >= 1.
PowerFit fit_power_regression(std::span<const int> history);

// Emotion from the comparison of the shortest known remaining path (act),
// the live expected step count (exp1) and the regression estimate (norm).
// Rules are evaluated in a fixed order, first match wins:
//   1. exp1 < norm                -> Fear
//   2. act < norm and exp1 > act  -> Anger
//   3. act < norm and exp1 <= act -> Sadness
//   4. act > norm                 -> Joy
//   5. otherwise                  -> Sadness
// The function is total and depends only on the relative order of its
// arguments (scale-invariant under any k > 0).
Emotion classify_emotion(double act, double exp1, double norm);

struct PosRemaining {
  GridPos pos;
  int remaining;  // steps from the visit to the end of the episode
};

// Per-agent emotional bookkeeping across one run.
//
// norm is refit from the full episode history at every episode start.
// exp1 starts each episode equal to norm and increments once per decision
// tick past norm, so exp1 >= norm within an episode. act tracks the best
// remaining step count recorded for the current position in earlier
// episodes; unknown positions keep the previous act value. Before anything
// is known act equals the bootstrap norm, the uninformative default.
class AppraisalState {
 public:
  // bootstrap_norm seeds norm before any episode has completed.
  AppraisalState(int width, int height, double bootstrap_norm);

  void begin_episode(int episode_index);  // 1-based
  void on_step(int steps_so_far, GridPos pos);
  // Appends steps_taken to the history. When the goal was reached, folds
  // the trajectory into the best-known-distance table; the first visit of
  // a position within the trajectory wins, and stored values only ever
  // decrease across episodes. Truncated episodes update the history only.
  void end_episode(int steps_taken, std::span<const PosRemaining> trajectory,
                   bool reached_goal);

  double norm() const { return norm_; }
  double exp1() const { return exp1_; }
  double act() const { return act_; }
  const std::vector<int>& history() const { return history_; }
  std::optional<int> best_distance(GridPos pos) const;

 private:
  std::size_t index(GridPos pos) const;

  int width_;
  int height_;
  double bootstrap_norm_;
  std::vector<int> history_;
  std::vector<int> dist_best_;  // -1 = unknown
  double norm_ = 0.0;
  double exp1_ = 0.0;
  double act_;       // bootstrap norm until a known position is visited
  double last_act_;
};

}  // namespace affectq
