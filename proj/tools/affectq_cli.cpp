/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Command-line front end. Everything behind the flags goes through the
// shared library's C interface (affectq/affectq.h).
//
//   affectq run   --agent standard --epsilon 0.5 --seed 42 --out out/
//   affectq sweep --seed 1 --out out/
//   affectq stats column_a.txt column_b.txt
//
// Exit codes: 0 success, 1 runtime error, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "affectq/affectq.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
  int width = 15;
  int height = 15;
  std::string start = "0,0";
  std::string goal = "6,6";
  double alpha = 0.1;
  double gamma = 0.9;
  double goal_reward = 100.0;
  int episodes = 200;
  int runs = 20;
  std::uint64_t seed = 0;
  int step_cap = 10000;
  std::string out_dir = "out";
  std::string format = "csv";
};

void add_common_flags(CLI::App& cmd, CommonFlags& f) {
  cmd.add_option("--width", f.width, "Grid width in cells");
  cmd.add_option("--height", f.height, "Grid height in cells");
  cmd.add_option("--start", f.start, "Start position as x,y");
  cmd.add_option("--goal", f.goal, "Goal position as x,y");
  cmd.add_option("--alpha", f.alpha, "Learning rate in (0,1]");
  cmd.add_option("--gamma", f.gamma, "Discount factor in [0,1)");
  cmd.add_option("--goal-reward", f.goal_reward, "Reward for entering the goal");
  cmd.add_option("--episodes", f.episodes, "Episodes per run");
  cmd.add_option("--runs", f.runs, "Runs per sweep cell");
  cmd.add_option("--seed", f.seed, "Master seed (or env AFFECTQ_SEED)")
      ->envname("AFFECTQ_SEED")
      ->required();
  cmd.add_option("--step-cap", f.step_cap,
                 "Truncate an episode after this many steps");
  cmd.add_option("--out", f.out_dir, "Output directory");
}

bool parse_pos(const std::string& text, int& x, int& y) {
  return std::sscanf(text.c_str(), "%d,%d", &x, &y) == 2;
}

// Returns the exit code for a failed library call.
int fail(affectq_status status, const char* what) {
  std::cerr << "affectq: " << what << ": " << affectq_status_name(status)
            << ": " << affectq_last_error() << "\n";
  return status == AFFECTQ_ERR_INVALID_ARGUMENT ? kExitUsage : kExitRuntime;
}

struct ConfigHandle {
  affectq_config* cfg = affectq_config_new();
  ~ConfigHandle() { affectq_config_free(cfg); }
};

int apply_common_flags(affectq_config* cfg, const CommonFlags& f) {
  int sx, sy, gx, gy;
  if (!parse_pos(f.start, sx, sy) || !parse_pos(f.goal, gx, gy)) {
    std::cerr << "affectq: --start/--goal must be given as x,y\n";
    return kExitUsage;
  }
  if (affectq_status s =
          affectq_config_set_grid(cfg, f.width, f.height, sx, sy, gx, gy))
    return fail(s, "grid configuration");
  if (affectq_status s =
          affectq_config_set_learning(cfg, f.alpha, f.gamma, f.goal_reward))
    return fail(s, "learning configuration");
  if (affectq_status s =
          affectq_config_set_protocol(cfg, f.episodes, f.runs, f.step_cap))
    return fail(s, "protocol configuration");
  if (affectq_status s = affectq_config_set_master_seed(cfg, f.seed))
    return fail(s, "seed configuration");
  return kExitOk;
}

int cmd_run(const CommonFlags& f, const std::string& agent, double epsilon) {
  ConfigHandle handle;
  if (int rc = apply_common_flags(handle.cfg, f)) return rc;

  const affectq_agent kind = agent == "standard" ? AFFECTQ_AGENT_STANDARD
                                                 : AFFECTQ_AGENT_AFFECTIVE;
  affectq_run* run = nullptr;
  if (affectq_status s = affectq_run_single(handle.cfg, kind, epsilon, &run))
    return fail(s, "run");

  const bool json = f.format == "json";
  const std::filesystem::path path =
      std::filesystem::path(f.out_dir) / (json ? "episodes.json"
                                               : "episodes.csv");
  const affectq_status s = affectq_run_write(
      run, path.string().c_str(), json ? AFFECTQ_FORMAT_JSON
                                       : AFFECTQ_FORMAT_CSV);
  affectq_run_free(run);
  if (s) return fail(s, "write");
  std::cout << path.string() << "\n";
  return kExitOk;
}

int cmd_sweep(const CommonFlags& f, int threads, bool tie_epsilon_seeds) {
  ConfigHandle handle;
  if (int rc = apply_common_flags(handle.cfg, f)) return rc;
  if (affectq_status s = affectq_config_set_threads(handle.cfg, threads))
    return fail(s, "threads configuration");
  if (affectq_status s = affectq_config_set_tie_epsilon_seeds(
          handle.cfg, tie_epsilon_seeds ? 1 : 0))
    return fail(s, "seed-mode configuration");

  if (affectq_status s = affectq_sweep_write(handle.cfg, f.out_dir.c_str()))
    return fail(s, "sweep");
  for (const char* name : {"sweep_summary.csv", "fig3.csv", "fig4.csv",
                           "fig5.csv", "fig6.csv", "tables.json"})
    std::cout << (std::filesystem::path(f.out_dir) / name).string() << "\n";
  return kExitOk;
}

bool read_column(const std::string& path, std::vector<double>& out,
                 std::string& error) {
  std::ifstream in(path);
  if (!in) {
    error = "could not open " + path;
    return false;
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string token;
    if (!(ss >> token)) continue;  // skip blank lines
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0') {
      error = path + ":" + std::to_string(line_no) + ": not a number: " + token;
      return false;
    }
    out.push_back(v);
  }
  return true;
}

int cmd_stats(const std::string& file_a, const std::string& file_b) {
  std::vector<double> xs, ys;
  std::string error;
  if (!read_column(file_a, xs, error) || !read_column(file_b, ys, error)) {
    std::cerr << "affectq: " << error << "\n";
    return kExitRuntime;
  }
  if (xs.size() != ys.size()) {
    std::cerr << "affectq: column length mismatch: " << file_a << " has "
              << xs.size() << " values, " << file_b << " has " << ys.size()
              << "\n";
    return kExitRuntime;
  }
  affectq_t_test test;
  if (affectq_status s =
          affectq_paired_t_test(xs.data(), ys.data(), xs.size(), &test)) {
    std::cerr << "affectq: t-test: " << affectq_status_name(s) << ": "
              << affectq_last_error() << "\n";
    return kExitRuntime;  // degenerate or too-short input is a data error
  }
  size_t required = 0;
  if (affectq_status s = affectq_t_test_json(&test, nullptr, 0, &required))
    return fail(s, "t-test serialization");
  std::string json(required, '\0');
  if (affectq_status s =
          affectq_t_test_json(&test, json.data(), json.size(), &required))
    return fail(s, "t-test serialization");
  json.resize(required - 1);  // drop the NUL
  std::cout << json;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid-world pursuit simulations with standard and "
               "emotion-driven Q-learning agents"};
  app.set_version_flag("--version", affectq_version());
  app.require_subcommand(1);

  CommonFlags run_flags;
  std::string agent;
  double epsilon = 0.1;
  CLI::App* run = app.add_subcommand(
      "run", "Run one agent and write its per-episode table");
  run->add_option("--agent", agent, "Agent kind")
      ->check(CLI::IsMember({"standard", "affective"}))
      ->required();
  run->add_option("--epsilon", epsilon,
                  "Exploration probability (standard agent)");
  add_common_flags(*run, run_flags);
  run->add_option("--format", run_flags.format, "episodes table format")
      ->check(CLI::IsMember({"csv", "json"}));

  CommonFlags sweep_flags;
  int threads = 1;
  bool tie_epsilon_seeds = false;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Run the full epsilon sweep for both agents");
  add_common_flags(*sweep, sweep_flags);
  sweep->add_option("--threads", threads,
                    "Worker threads (0 = hardware concurrency)");
  sweep->add_flag("--tie-epsilon-seeds", tie_epsilon_seeds,
                  "Reuse run seeds across the epsilon axis");

  std::string file_a, file_b;
  CLI::App* stats = app.add_subcommand(
      "stats", "Paired t-test over two numeric column files");
  stats->add_option("file_a", file_a, "First column file")->required();
  stats->add_option("file_b", file_b, "Second column file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help / --version
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_flags, agent, epsilon);
    if (sweep->parsed()) return cmd_sweep(sweep_flags, threads,
                                          tie_epsilon_seeds);
    return cmd_stats(file_a, file_b);
  } catch (const std::exception& e) {
    std::cerr << "affectq: " << e.what() << "\n";
    return kExitRuntime;
  }
}
