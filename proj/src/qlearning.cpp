/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "qlearning.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace affectq {

void validate(const LearningParams& params) {
  if (!(params.alpha > 0.0 && params.alpha <= 1.0))
    throw std::invalid_argument("alpha must be in (0, 1]");
  if (!(params.gamma >= 0.0 && params.gamma < 1.0))
    throw std::invalid_argument("gamma must be in [0, 1)");
  if (!(params.epsilon >= 0.0 && params.epsilon <= 1.0))
    throw std::invalid_argument("epsilon must be in [0, 1]");
}

QTable::QTable(int width, int height) : width_(width), height_(height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("QTable dimensions must be positive");
  values_.assign(static_cast<std::size_t>(width) * height * kAllActions.size(),
                 0.0);
}

std::size_t QTable::index(GridPos s, Action a) const {
  if (s.x < 0 || s.x >= width_ || s.y < 0 || s.y >= height_)
    throw std::invalid_argument("QTable access out of bounds");
  return (static_cast<std::size_t>(s.y) * width_ + s.x) * kAllActions.size() +
         static_cast<std::size_t>(a);
}

double QTable::max_value(GridPos s) const {
  double best = value(s, Action::Up);
  for (std::size_t i = 1; i < kAllActions.size(); ++i)
    best = std::max(best, value(s, kAllActions[i]));
  return best;
}

double td_update(QTable& q, GridPos s, Action a, double reward, GridPos s_next,
                 const LearningParams& params) {
  if (!std::isfinite(reward))
    throw std::invalid_argument("td_update requires a finite reward");
  const double old_value = q.value(s, a);
  const double target = reward + params.gamma * q.max_value(s_next);
  const double updated = old_value + params.alpha * (target - old_value);
  if (!std::isfinite(updated))
    throw std::domain_error("td_update produced a non-finite value");
  q.set(s, a, updated);
  return updated;
}

Action greedy_action(const QTable& q, GridPos s, SplitMix64& rng) {
  std::array<Action, 4> tied{};
  std::uint32_t tie_count = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (Action a : kAllActions) {
    const double v = q.value(s, a);
    if (v > best) {
      best = v;
      tied[0] = a;
      tie_count = 1;
    } else if (v == best) {
      tied[tie_count++] = a;
    }
  }
  return tie_count == 1 ? tied[0] : tied[rng.below(tie_count)];
}

Action epsilon_greedy(const QTable& q, GridPos s, const LearningParams& params,
                      SplitMix64& rng, bool* explored) {
  if (rng.next_double() < params.epsilon) {
    if (explored) *explored = true;
    return static_cast<Action>(rng.below(4));
  }
  if (explored) *explored = false;
  return greedy_action(q, s, rng);
}

}  // namespace affectq
