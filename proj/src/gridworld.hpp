/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <compare>

namespace affectq {

// Cell coordinates: x is the column, y is the row, origin top-left.
struct GridPos {
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const GridPos&, const GridPos&) = default;
};

// Canonical ordering Up < Down < Left < Right; tie-breaking and tallies
// depend on it staying fixed.
enum class Action : int { Up = 0, Down = 1, Left = 2, Right = 3 };

inline constexpr std::array<Action, 4> kAllActions{Action::Up, Action::Down,
                                                   Action::Left, Action::Right};

const char* to_string(Action a);

struct StepResult {
  GridPos next;
  double reward;
  bool done;
};

// Bounded grid with a static goal. Moves are single-cell; moving off the
// grid leaves the position unchanged. Immutable after construction, safe
// to share across concurrent runs.
class GridWorld {
 public:
  GridWorld(int width, int height, GridPos start, GridPos goal,
            double goal_reward = 100.0);

  int width() const { return width_; }
  int height() const { return height_; }
  GridPos start() const { return start_; }
  GridPos goal() const { return goal_; }
  double goal_reward() const { return goal_reward_; }

  bool in_bounds(GridPos p) const {
    return p.x >= 0 && p.x < width_ && p.y >= 0 && p.y < height_;
  }

  // Reward is nonzero exactly when the move enters the goal.
  StepResult step(GridPos pos, Action action) const;

  // Length of a shortest move sequence from start to goal (Manhattan
  // distance; there are no obstacles).
  int optimal_steps() const;

 private:
  int width_;
  int height_;
  GridPos start_;
  GridPos goal_;
  double goal_reward_;
};

}  // namespace affectq
