/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "affective_policy.hpp"
#include "appraisal.hpp"
#include "config.hpp"
#include "qlearning.hpp"

namespace affectq {

enum class AgentKind : int { Standard = 0, Affective = 1 };

const char* to_string(AgentKind kind);

// Per-episode metrics. `steps` counts primitive cell transitions, with a
// zero-displacement decision contributing one step; `decisions` counts
// policy invocations. random_decisions covers the standard agent's
// epsilon-branch choices and the affective agent's Joy decisions.
struct EpisodeRecord {
  int index = 0;  // 1-based
  int steps = 0;
  int decisions = 0;
  int random_decisions = 0;
  std::array<int, 4> emotion_tally{};  // indexed by Emotion
  bool truncated = false;
  double norm = 0.0;
  double exp1_final = 0.0;
  double act_final = 0.0;
  friend bool operator==(const EpisodeRecord&, const EpisodeRecord&) = default;
};

struct RunSummary {
  AgentKind agent_kind = AgentKind::Standard;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::vector<EpisodeRecord> episodes;
  std::optional<int> first_optimal_episode;
  long long total_steps_before_optimal = 0;
};

// Fraction of an episode's decisions whose direction was uniform random;
// 0 when the episode recorded no decisions.
double equivalent_epsilon(const EpisodeRecord& record);

// Smallest 1-based episode index whose step count equals optimal_steps.
std::optional<int> first_optimal_episode(
    const std::vector<EpisodeRecord>& episodes, int optimal_steps);

// Sum of steps over the episodes before the first optimal one; the sum of
// all episodes when the optimum is never reached.
long long total_steps_before_optimal(
    const std::vector<EpisodeRecord>& episodes, int optimal_steps);

// One episode from the start position until the goal or the step cap.
// The standard agent moves one cell per epsilon-greedy decision; the
// affective agent appraises, classifies, then executes an emotion-driven
// move. Requires appraisal != nullptr for the affective agent.
EpisodeRecord run_episode(const GridWorld& world, AgentKind kind, QTable& q,
                          AppraisalState* appraisal,
                          const LearningParams& params, SplitMix64& rng,
                          int episode_index, int step_cap);

// A full run: fresh Q-table and appraisal state, `config.episodes`
// episodes, summary metrics filled in.
RunSummary run_agent(const SimConfig& config, AgentKind kind, double epsilon,
                     std::uint64_t seed);

// All runs of the protocol grid, ordered by (agent, epsilon index, run
// index). The affective agent ignores epsilon but is run once per epsilon
// cell so its statistics mirror the standard agent's table layout.
struct SweepTable {
  SimConfig config;
  std::vector<RunSummary> cells;

  std::size_t cell_index(AgentKind kind, std::size_t epsilon_index,
                         std::size_t run_index) const;
  const RunSummary& cell(AgentKind kind, std::size_t epsilon_index,
                         std::size_t run_index) const;
};

// Deterministic: identical configs give identical tables, regardless of
// the thread count. Cell seeds come from derive_seed(master, agent,
// epsilon index, run index).
SweepTable sweep(const SimConfig& config);

// Series feeding the result tables and figure files.
struct SweepAggregates {
  std::vector<double> epsilons;
  // per epsilon, over runs x episodes
  std::vector<double> mean_steps_standard;
  std::vector<double> mean_steps_affective;
  // per epsilon, mean over runs of the per-run totals
  std::vector<double> mean_total_standard;
  std::vector<double> mean_total_affective;
  // per episode index, averaged over all affective runs
  std::vector<std::array<double, 4>> emotion_fractions;  // indexed by Emotion
  std::vector<double> equivalent_epsilon;
  // affective first-optimal summary (runs that reached the optimum)
  double affective_mean_first_optimal = 0.0;
  int affective_runs_with_optimal = 0;
  int affective_runs_total = 0;
};

SweepAggregates aggregate(const SweepTable& table);

}  // namespace affectq
