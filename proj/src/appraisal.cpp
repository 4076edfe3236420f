/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "appraisal.hpp"

#include <algorithm>
#include <stdexcept>

namespace affectq {

const char* to_string(Emotion e) {
  switch (e) {
    case Emotion::Joy:
      return "joy";
    case Emotion::Sadness:
      return "sadness";
    case Emotion::Anger:
      return "anger";
    case Emotion::Fear:
      return "fear";
  }
  return "?";
}

PowerFit fit_power_regression(std::span<const double> history) {
  const std::size_t n = history.size();
  if (n < 2)
    throw std::invalid_argument(
        "power regression needs at least two observations");
  double sum_t = 0.0, sum_y = 0.0, sum_tt = 0.0, sum_ty = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(history[i] > 0.0))
      throw std::invalid_argument("power regression entries must be positive");
    const double lt = std::log(static_cast<double>(i + 1));
    const double ly = std::log(history[i]);
    sum_t += lt;
    sum_y += ly;
    sum_tt += lt * lt;
    sum_ty += lt * ly;
  }
  const double dn = static_cast<double>(n);
  const double sxx = sum_tt - sum_t * sum_t / dn;
  const double sxy = sum_ty - sum_t * sum_y / dn;
  const double b = sxy / sxx;  // t = 1..n, so sxx > 0 for n >= 2
  const double intercept = (sum_y - b * sum_t) / dn;
  return {std::exp(intercept), b};
}

PowerFit fit_power_regression(std::span<const int> history) {
  std::vector<double> ys;
  ys.reserve(history.size());
  for (int v : history) {
    if (v < 1)
      throw std::invalid_argument("power regression entries must be >= 1");
    ys.push_back(static_cast<double>(v));
  }
  if (ys.size() < 2)
    throw std::invalid_argument(
        "power regression needs at least two observations");
  return fit_power_regression(std::span<const double>{ys});
}

Emotion classify_emotion(double act, double exp1, double norm) {
  if (exp1 < norm) return Emotion::Fear;
  if (act < norm && exp1 > act) return Emotion::Anger;
  if (act < norm && exp1 <= act) return Emotion::Sadness;
  if (act > norm) return Emotion::Joy;
  return Emotion::Sadness;  // act == norm, exp1 >= norm
}

AppraisalState::AppraisalState(int width, int height, double bootstrap_norm)
    : width_(width),
      height_(height),
      bootstrap_norm_(bootstrap_norm),
      act_(bootstrap_norm),
      last_act_(bootstrap_norm) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("appraisal grid dimensions must be positive");
  if (!(bootstrap_norm > 0.0))
    throw std::invalid_argument("bootstrap norm must be positive");
  dist_best_.assign(static_cast<std::size_t>(width) * height, -1);
}

std::size_t AppraisalState::index(GridPos pos) const {
  if (pos.x < 0 || pos.x >= width_ || pos.y < 0 || pos.y >= height_)
    throw std::invalid_argument("appraisal position out of bounds");
  return static_cast<std::size_t>(pos.y) * width_ + pos.x;
}

void AppraisalState::begin_episode(int episode_index) {
  if (history_.empty()) {
    norm_ = bootstrap_norm_;
  } else if (history_.size() == 1) {
    norm_ = static_cast<double>(history_.front());
  } else {
    norm_ = fit_power_regression(history_).eval(
        static_cast<double>(episode_index));
  }
  exp1_ = norm_;
}

void AppraisalState::on_step(int steps_so_far, GridPos pos) {
  if (steps_so_far > norm_) exp1_ += 1.0;
  const int known = dist_best_[index(pos)];
  act_ = known >= 0 ? static_cast<double>(known) : last_act_;
  last_act_ = act_;
}

void AppraisalState::end_episode(int steps_taken,
                                 std::span<const PosRemaining> trajectory,
                                 bool reached_goal) {
  history_.push_back(steps_taken);
  if (!reached_goal) return;
  std::vector<bool> seen(dist_best_.size(), false);
  for (const PosRemaining& visit : trajectory) {
    const std::size_t i = index(visit.pos);
    if (seen[i]) continue;  // first visit wins within one episode
    seen[i] = true;
    dist_best_[i] = dist_best_[i] < 0 ? visit.remaining
                                      : std::min(dist_best_[i], visit.remaining);
  }
}

std::optional<int> AppraisalState::best_distance(GridPos pos) const {
  const int v = dist_best_[index(pos)];
  if (v < 0) return std::nullopt;
  return v;
}

}  // namespace affectq
