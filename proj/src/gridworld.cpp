/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "gridworld.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace affectq {

const char* to_string(Action a) {
  switch (a) {
    case Action::Up:
      return "up";
    case Action::Down:
      return "down";
    case Action::Left:
      return "left";
    case Action::Right:
      return "right";
  }
  return "?";
}

GridWorld::GridWorld(int width, int height, GridPos start, GridPos goal,
                     double goal_reward)
    : width_(width),
      height_(height),
      start_(start),
      goal_(goal),
      goal_reward_(goal_reward) {
  if (width < 2 || height < 2)
    throw std::invalid_argument("grid must be at least 2x2");
  if (!in_bounds(start) || !in_bounds(goal))
    throw std::invalid_argument("start and goal must lie inside the grid");
  if (start == goal) throw std::invalid_argument("start must differ from goal");
  if (!(goal_reward > 0.0) || !std::isfinite(goal_reward))
    throw std::invalid_argument("goal reward must be positive and finite");
}

StepResult GridWorld::step(GridPos pos, Action action) const {
  if (!in_bounds(pos))
    throw std::invalid_argument("step from out-of-bounds position (" +
                                std::to_string(pos.x) + "," +
                                std::to_string(pos.y) + ")");
  GridPos next = pos;
  switch (action) {
    case Action::Up:
      next.y -= 1;
      break;
    case Action::Down:
      next.y += 1;
      break;
    case Action::Left:
      next.x -= 1;
      break;
    case Action::Right:
      next.x += 1;
      break;
  }
  if (!in_bounds(next)) next = pos;  // off-grid moves clamp
  const bool done = next == goal_;
  return {next, done ? goal_reward_ : 0.0, done};
}

int GridWorld::optimal_steps() const {
  return std::abs(goal_.x - start_.x) + std::abs(goal_.y - start_.y);
}

}  // namespace affectq
