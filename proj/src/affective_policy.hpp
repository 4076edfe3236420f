/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "appraisal.hpp"
#include "qlearning.hpp"

namespace affectq {

// One movement decision: a direction and how many cells to move.
// Joy and Anger draw the speed from {1, 2}, Sadness and Fear from {0, 1}.
struct MoveDecision {
  Action direction;
  int speed;
};

// Emotion-to-movement mapping: a joyful agent picks its direction uniformly
// at random, every other emotion follows the greedy action. The direction
// is drawn before the speed.
MoveDecision decide(Emotion emotion, const QTable& q, GridPos s,
                    SplitMix64& rng);

struct MoveOutcome {
  GridPos final_pos;
  int cells_moved;  // single-cell transitions executed (clamped ones count)
  bool done;
  std::array<GridPos, 2> path;  // positions after each executed transition
};

// Executes a decision as `speed` consecutive single-cell transitions in the
// same direction, with one TD update per transition, stopping early when
// the goal is reached. Speed 0 performs no transition and no update.
MoveOutcome execute_move(const GridWorld& world, QTable& q, GridPos s,
                         MoveDecision decision, const LearningParams& params);

}  // namespace affectq
