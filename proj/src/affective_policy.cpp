/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "affective_policy.hpp"

namespace affectq {

MoveDecision decide(Emotion emotion, const QTable& q, GridPos s,
                    SplitMix64& rng) {
  const Action direction = emotion == Emotion::Joy
                               ? static_cast<Action>(rng.below(4))
                               : greedy_action(q, s, rng);
  const bool fast = emotion == Emotion::Joy || emotion == Emotion::Anger;
  const int speed = (fast ? 1 : 0) + static_cast<int>(rng.below(2));
  return {direction, speed};
}

MoveOutcome execute_move(const GridWorld& world, QTable& q, GridPos s,
                         MoveDecision decision, const LearningParams& params) {
  MoveOutcome out{s, 0, false, {}};
  GridPos pos = s;
  for (int i = 0; i < decision.speed; ++i) {
    const StepResult sr = world.step(pos, decision.direction);
    td_update(q, pos, decision.direction, sr.reward, sr.next, params);
    pos = sr.next;
    out.path[out.cells_moved++] = pos;
    if (sr.done) {
      out.done = true;
      break;  // the unexecuted remainder of the move is discarded
    }
  }
  out.final_pos = pos;
  return out;
}

}  // namespace affectq
