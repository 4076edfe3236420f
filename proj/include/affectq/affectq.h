/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef AFFECTQ_H
#define AFFECTQ_H

/* C interface of the affectq shared library.
 *
 * affectq simulates a grid-world pursuit task with two tabular Q-learning
 * agents: a standard epsilon-greedy agent and an "affective" agent whose
 * direction and speed are driven by an appraisal-derived emotion. The
 * library runs single runs and full parameter sweeps, writes CSV/JSON
 * result artifacts, and ships the statistics kernel (sample moments,
 * Pearson correlation, paired t-test, Student-t distribution) used to
 * compare the two agents.
 *
 * All handles are opaque; every fallible call returns an affectq_status.
 * On failure a thread-local message is available via affectq_last_error().
 * Given the same configuration (including the master seed), every output
 * is byte-identical across invocations and thread counts.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#define AFFECTQ_API __declspec(dllexport)
#else
#define AFFECTQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum affectq_status {
  AFFECTQ_OK = 0,
  AFFECTQ_ERR_INVALID_ARGUMENT = 1, /* bad parameter or configuration value */
  AFFECTQ_ERR_IO = 2,               /* file could not be written or read */
  AFFECTQ_ERR_DEGENERATE_INPUT = 3, /* statistic undefined for this input */
  AFFECTQ_ERR_INTERNAL = 4
} affectq_status;

typedef enum affectq_agent {
  AFFECTQ_AGENT_STANDARD = 0,
  AFFECTQ_AGENT_AFFECTIVE = 1
} affectq_agent;

typedef enum affectq_format {
  AFFECTQ_FORMAT_CSV = 0,
  AFFECTQ_FORMAT_JSON = 1
} affectq_format;

AFFECTQ_API const char* affectq_version(void);
AFFECTQ_API const char* affectq_status_name(affectq_status status);

/* Message for the most recent failing call on this thread. Empty string if
 * no call has failed. The pointer stays valid until the next failing call. */
AFFECTQ_API const char* affectq_last_error(void);

/* ---- configuration ------------------------------------------------ */

typedef struct affectq_config affectq_config;

/* Defaults: 15x15 grid, start (0,0), goal (6,6), alpha 0.1, gamma 0.9,
 * goal reward 100, 200 episodes, 20 runs, epsilon list 0.1..0.9 step 0.1,
 * step cap 10000, master seed 1, single worker thread. */
AFFECTQ_API affectq_config* affectq_config_new(void);
AFFECTQ_API void affectq_config_free(affectq_config* cfg);

AFFECTQ_API affectq_status affectq_config_set_grid(affectq_config* cfg,
                                                   int32_t width,
                                                   int32_t height,
                                                   int32_t start_x,
                                                   int32_t start_y,
                                                   int32_t goal_x,
                                                   int32_t goal_y);
AFFECTQ_API affectq_status affectq_config_set_learning(affectq_config* cfg,
                                                       double alpha,
                                                       double gamma,
                                                       double goal_reward);
AFFECTQ_API affectq_status affectq_config_set_protocol(affectq_config* cfg,
                                                       int32_t episodes,
                                                       int32_t runs,
                                                       int32_t step_cap);
AFFECTQ_API affectq_status affectq_config_set_epsilons(affectq_config* cfg,
                                                       const double* values,
                                                       size_t count);
AFFECTQ_API affectq_status affectq_config_set_master_seed(affectq_config* cfg,
                                                          uint64_t seed);
/* threads = 0 selects the hardware concurrency. */
AFFECTQ_API affectq_status affectq_config_set_threads(affectq_config* cfg,
                                                      int32_t threads);
/* When enabled, sweep cells reuse the same child seed across the epsilon
 * axis, so agents that ignore epsilon produce identical results per cell. */
AFFECTQ_API affectq_status affectq_config_set_tie_epsilon_seeds(
    affectq_config* cfg, int enabled);

/* ---- single run ---------------------------------------------------- */

typedef struct affectq_run affectq_run;

typedef struct affectq_episode {
  int32_t index; /* 1-based */
  int32_t steps;
  int32_t decisions;
  int32_t random_decisions;
  int32_t joy;
  int32_t sadness;
  int32_t anger;
  int32_t fear;
  int32_t truncated; /* 0 or 1 */
  double norm;
  double exp1;
  double act;
} affectq_episode;

/* Runs one agent for the configured number of episodes. epsilon is the
 * exploration probability of the standard agent; the affective agent
 * ignores it. The run seed is derived from the configured master seed. */
AFFECTQ_API affectq_status affectq_run_single(const affectq_config* cfg,
                                              affectq_agent agent,
                                              double epsilon,
                                              affectq_run** out);
AFFECTQ_API void affectq_run_free(affectq_run* run);

AFFECTQ_API int32_t affectq_run_episode_count(const affectq_run* run);
AFFECTQ_API affectq_status affectq_run_episode_at(const affectq_run* run,
                                                  int32_t index,
                                                  affectq_episode* out);
/* 1-based episode index of the first optimal episode, 0 if none. */
AFFECTQ_API int32_t affectq_run_first_optimal_episode(const affectq_run* run);
AFFECTQ_API int64_t
affectq_run_total_steps_before_optimal(const affectq_run* run);

/* Writes the per-episode table to `path` (parent directories are created).
 * Files are written to a temporary name and renamed into place. */
AFFECTQ_API affectq_status affectq_run_write(const affectq_run* run,
                                             const char* path,
                                             affectq_format format);

/* ---- sweep ---------------------------------------------------------- */

/* Runs both agents over every (epsilon, run) cell of the configuration and
 * writes sweep_summary.csv, fig3.csv, fig4.csv, fig5.csv, fig6.csv and
 * tables.json into out_dir. */
AFFECTQ_API affectq_status affectq_sweep_write(const affectq_config* cfg,
                                               const char* out_dir);

/* ---- statistics kernel ---------------------------------------------- */

typedef struct affectq_t_test {
  double mean_a;
  double mean_b;
  double variance_a; /* sample variance, n-1 denominator */
  double variance_b;
  double pearson; /* NaN when either column is constant */
  int32_t n;
  int32_t df;
  double t_stat;
  double p_one_tail; /* P(T >= |t|) */
  double p_two_tail;
  double t_crit_one_tail; /* alpha = 0.05 */
  double t_crit_two_tail;
} affectq_t_test;

AFFECTQ_API affectq_status affectq_paired_t_test(const double* xs,
                                                 const double* ys,
                                                 size_t n,
                                                 affectq_t_test* out);

/* Serializes a t-test result as a JSON object. Always stores the needed
 * buffer size (incl. the terminating NUL) in *required; copies into
 * `buffer` only when `size` is large enough. */
AFFECTQ_API affectq_status affectq_t_test_json(const affectq_t_test* test,
                                               char* buffer,
                                               size_t size,
                                               size_t* required);

AFFECTQ_API affectq_status affectq_t_cdf(double t, int32_t df, double* out);
/* tails is 1 or 2; returns the (1-alpha) or (1-alpha/2) quantile. */
AFFECTQ_API affectq_status affectq_t_critical(int32_t df,
                                              double alpha,
                                              int32_t tails,
                                              double* out);

#ifdef __cplusplus
}
#endif

#endif /* AFFECTQ_H */
