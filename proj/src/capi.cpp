/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "affectq/affectq.h"

#include <cstring>
#include <exception>
#include <string>

#include "artifacts.hpp"
#include "config.hpp"
#include "experiment.hpp"
#include "rng.hpp"
#include "stats.hpp"

// The C layer: opaque handles wrap the C++ core, exceptions are mapped to
// status codes, and the failing message is parked in a thread-local slot.

struct affectq_config {
  affectq::SimConfig cfg;
};

struct affectq_run {
  affectq::RunSummary run;
};

namespace {

thread_local std::string g_last_error;

affectq_status set_error(affectq_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

affectq_status from_exception() {
  try {
    throw;
  } catch (const affectq::IoError& e) {
    return set_error(AFFECTQ_ERR_IO, e.what());
  } catch (const std::domain_error& e) {
    return set_error(AFFECTQ_ERR_DEGENERATE_INPUT, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(AFFECTQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(AFFECTQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(AFFECTQ_ERR_INTERNAL, "unknown error");
  }
}

affectq_status require(bool ok, const char* message) {
  if (ok) return AFFECTQ_OK;
  return set_error(AFFECTQ_ERR_INVALID_ARGUMENT, message);
}

}  // namespace

extern "C" {

const char* affectq_version(void) { return "0.1.0"; }

const char* affectq_status_name(affectq_status status) {
  switch (status) {
    case AFFECTQ_OK:
      return "ok";
    case AFFECTQ_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case AFFECTQ_ERR_IO:
      return "io_error";
    case AFFECTQ_ERR_DEGENERATE_INPUT:
      return "degenerate_input";
    case AFFECTQ_ERR_INTERNAL:
      return "internal_error";
  }
  return "unknown";
}

const char* affectq_last_error(void) { return g_last_error.c_str(); }

affectq_config* affectq_config_new(void) {
  try {
    return new affectq_config{};
  } catch (...) {
    return nullptr;
  }
}

void affectq_config_free(affectq_config* cfg) { delete cfg; }

affectq_status affectq_config_set_grid(affectq_config* cfg, int32_t width,
                                       int32_t height, int32_t start_x,
                                       int32_t start_y, int32_t goal_x,
                                       int32_t goal_y) {
  if (affectq_status s = require(cfg != nullptr, "config is null")) return s;
  try {
    affectq::GridWorld probe(width, height, {start_x, start_y},
                             {goal_x, goal_y}, cfg->cfg.goal_reward);
    cfg->cfg.width = width;
    cfg->cfg.height = height;
    cfg->cfg.start = {start_x, start_y};
    cfg->cfg.goal = {goal_x, goal_y};
    return AFFECTQ_OK;
  } catch (...) {
    return from_exception();
  }
}

affectq_status affectq_config_set_learning(affectq_config* cfg, double alpha,
                                           double gamma, double goal_reward) {
  if (affectq_status s = require(cfg != nullptr, "config is null")) return s;
  try {
    affectq::validate(affectq::LearningParams{alpha, gamma, 0.0});
    affectq::GridWorld probe(cfg->cfg.width, cfg->cfg.height, cfg->cfg.start,
                             cfg->cfg.goal, goal_reward);
    cfg->cfg.alpha = alpha;
    cfg->cfg.gamma = gamma;
    cfg->cfg.goal_reward = goal_reward;
    return AFFECTQ_OK;
  } catch (...) {
    return from_exception();
  }
}

affectq_status affectq_config_set_protocol(affectq_config* cfg,
                                           int32_t episodes, int32_t runs,
                                           int32_t step_cap) {
  if (affectq_status s = require(cfg != nullptr, "config is null")) return s;
  if (affectq_status s = require(episodes >= 1, "episodes must be >= 1"))
    return s;
  if (affectq_status s = require(runs >= 1, "runs must be >= 1")) return s;
  if (affectq_status s = require(step_cap >= 1, "step cap must be >= 1"))
    return s;
  cfg->cfg.episodes = episodes;
  cfg->cfg.runs = runs;
  cfg->cfg.step_cap = step_cap;
  return AFFECTQ_OK;
}

affectq_status affectq_config_set_epsilons(affectq_config* cfg,
                                           const double* values,
                                           size_t count) {
  if (affectq_status s = require(cfg != nullptr, "config is null")) return s;
  if (affectq_status s =
          require(values != nullptr && count > 0, "epsilon list is empty"))
    return s;
  for (size_t i = 0; i < count; ++i)
    if (affectq_status s = require(values[i] >= 0.0 && values[i] <= 1.0,
                                   "epsilon values must be in [0, 1]"))
      return s;
  cfg->cfg.epsilon_list.assign(values, values + count);
  return AFFECTQ_OK;
}

affectq_status affectq_config_set_master_seed(affectq_config* cfg,
                                              uint64_t seed) {
  if (affectq_status s = require(cfg != nullptr, "config is null")) return s;
  cfg->cfg.master_seed = seed;
  return AFFECTQ_OK;
}

affectq_status affectq_config_set_threads(affectq_config* cfg,
                                          int32_t threads) {
  if (affectq_status s = require(cfg != nullptr, "config is null")) return s;
  if (affectq_status s = require(threads >= 0, "threads must be >= 0"))
    return s;
  cfg->cfg.threads = threads;
  return AFFECTQ_OK;
}

affectq_status affectq_config_set_tie_epsilon_seeds(affectq_config* cfg,
                                                    int enabled) {
  if (affectq_status s = require(cfg != nullptr, "config is null")) return s;
  cfg->cfg.tie_epsilon_seeds = enabled != 0;
  return AFFECTQ_OK;
}

affectq_status affectq_run_single(const affectq_config* cfg,
                                  affectq_agent agent, double epsilon,
                                  affectq_run** out) {
  if (affectq_status s =
          require(cfg != nullptr && out != nullptr, "null argument"))
    return s;
  if (affectq_status s = require(
          agent == AFFECTQ_AGENT_STANDARD || agent == AFFECTQ_AGENT_AFFECTIVE,
          "unknown agent kind"))
    return s;
  *out = nullptr;
  try {
    cfg->cfg.validate();
    const affectq::AgentKind kind = static_cast<affectq::AgentKind>(agent);
    const std::uint64_t seed = affectq::derive_seed(
        cfg->cfg.master_seed, static_cast<std::uint64_t>(kind), 0, 0);
    *out = new affectq_run{
        affectq::run_agent(cfg->cfg, kind, epsilon, seed)};
    return AFFECTQ_OK;
  } catch (...) {
    return from_exception();
  }
}

void affectq_run_free(affectq_run* run) { delete run; }

int32_t affectq_run_episode_count(const affectq_run* run) {
  if (!run) return 0;
  return static_cast<int32_t>(run->run.episodes.size());
}

affectq_status affectq_run_episode_at(const affectq_run* run, int32_t index,
                                      affectq_episode* out) {
  if (affectq_status s =
          require(run != nullptr && out != nullptr, "null argument"))
    return s;
  if (affectq_status s =
          require(index >= 0 && static_cast<std::size_t>(index) <
                                    run->run.episodes.size(),
                  "episode index out of range"))
    return s;
  const affectq::EpisodeRecord& ep =
      run->run.episodes[static_cast<std::size_t>(index)];
  out->index = ep.index;
  out->steps = ep.steps;
  out->decisions = ep.decisions;
  out->random_decisions = ep.random_decisions;
  out->joy = ep.emotion_tally[static_cast<int>(affectq::Emotion::Joy)];
  out->sadness = ep.emotion_tally[static_cast<int>(affectq::Emotion::Sadness)];
  out->anger = ep.emotion_tally[static_cast<int>(affectq::Emotion::Anger)];
  out->fear = ep.emotion_tally[static_cast<int>(affectq::Emotion::Fear)];
  out->truncated = ep.truncated ? 1 : 0;
  out->norm = ep.norm;
  out->exp1 = ep.exp1_final;
  out->act = ep.act_final;
  return AFFECTQ_OK;
}

int32_t affectq_run_first_optimal_episode(const affectq_run* run) {
  if (!run || !run->run.first_optimal_episode) return 0;
  return *run->run.first_optimal_episode;
}

int64_t affectq_run_total_steps_before_optimal(const affectq_run* run) {
  if (!run) return 0;
  return run->run.total_steps_before_optimal;
}

affectq_status affectq_run_write(const affectq_run* run, const char* path,
                                 affectq_format format) {
  if (affectq_status s =
          require(run != nullptr && path != nullptr, "null argument"))
    return s;
  if (affectq_status s = require(
          format == AFFECTQ_FORMAT_CSV || format == AFFECTQ_FORMAT_JSON,
          "unknown format"))
    return s;
  try {
    affectq::write_run_artifacts(run->run, path,
                                 format == AFFECTQ_FORMAT_CSV
                                     ? affectq::OutputFormat::Csv
                                     : affectq::OutputFormat::Json);
    return AFFECTQ_OK;
  } catch (...) {
    return from_exception();
  }
}

affectq_status affectq_sweep_write(const affectq_config* cfg,
                                   const char* out_dir) {
  if (affectq_status s =
          require(cfg != nullptr && out_dir != nullptr, "null argument"))
    return s;
  try {
    const affectq::SweepTable table = affectq::sweep(cfg->cfg);
    affectq::write_sweep_artifacts(table, out_dir);
    return AFFECTQ_OK;
  } catch (...) {
    return from_exception();
  }
}

affectq_status affectq_paired_t_test(const double* xs, const double* ys,
                                     size_t n, affectq_t_test* out) {
  if (affectq_status s = require(
          xs != nullptr && ys != nullptr && out != nullptr, "null argument"))
    return s;
  try {
    const affectq::TTestResult r =
        affectq::paired_t_test({xs, n}, {ys, n});
    out->mean_a = r.mean_a;
    out->mean_b = r.mean_b;
    out->variance_a = r.var_a;
    out->variance_b = r.var_b;
    out->pearson = r.pearson;
    out->n = r.n;
    out->df = r.df;
    out->t_stat = r.t_stat;
    out->p_one_tail = r.p_one_tail;
    out->p_two_tail = r.p_two_tail;
    out->t_crit_one_tail = r.t_crit_one_tail;
    out->t_crit_two_tail = r.t_crit_two_tail;
    return AFFECTQ_OK;
  } catch (...) {
    return from_exception();
  }
}

affectq_status affectq_t_test_json(const affectq_t_test* test, char* buffer,
                                   size_t size, size_t* required) {
  if (affectq_status s = require(test != nullptr && required != nullptr,
                                 "null argument"))
    return s;
  try {
    affectq::TTestResult r{};
    r.mean_a = test->mean_a;
    r.mean_b = test->mean_b;
    r.var_a = test->variance_a;
    r.var_b = test->variance_b;
    r.pearson = test->pearson;
    r.n = test->n;
    r.df = test->df;
    r.t_stat = test->t_stat;
    r.p_one_tail = test->p_one_tail;
    r.p_two_tail = test->p_two_tail;
    r.t_crit_one_tail = test->t_crit_one_tail;
    r.t_crit_two_tail = test->t_crit_two_tail;
    const std::string json = affectq::t_test_json(r, "a", "b");
    *required = json.size() + 1;
    if (buffer != nullptr && size >= *required)
      std::memcpy(buffer, json.c_str(), *required);
    return AFFECTQ_OK;
  } catch (...) {
    return from_exception();
  }
}

affectq_status affectq_t_cdf(double t, int32_t df, double* out) {
  if (affectq_status s = require(out != nullptr, "null argument")) return s;
  try {
    *out = affectq::t_cdf(t, df);
    return AFFECTQ_OK;
  } catch (...) {
    return from_exception();
  }
}

affectq_status affectq_t_critical(int32_t df, double alpha, int32_t tails,
                                  double* out) {
  if (affectq_status s = require(out != nullptr, "null argument")) return s;
  try {
    *out = affectq::t_critical(df, alpha, tails);
    return AFFECTQ_OK;
  } catch (...) {
    return from_exception();
  }
}

}  // extern "C"
