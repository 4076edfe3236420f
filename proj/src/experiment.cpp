/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "experiment.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "rng.hpp"

namespace affectq {

const char* to_string(AgentKind kind) {
  return kind == AgentKind::Standard ? "standard" : "affective";
}

void SimConfig::validate() const {
  make_world();  // grid constraints
  affectq::validate(LearningParams{alpha, gamma, 0.0});
  if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");
  if (runs < 1) throw std::invalid_argument("runs must be >= 1");
  if (step_cap < 1) throw std::invalid_argument("step cap must be >= 1");
  if (epsilon_list.empty())
    throw std::invalid_argument("epsilon list must not be empty");
  for (double e : epsilon_list)
    if (!(e >= 0.0 && e <= 1.0))
      throw std::invalid_argument("epsilon values must be in [0, 1]");
  if (!(bootstrap_norm_factor > 0.0))
    throw std::invalid_argument("bootstrap norm factor must be positive");
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
}

double equivalent_epsilon(const EpisodeRecord& record) {
  if (record.decisions == 0) return 0.0;
  return static_cast<double>(record.random_decisions) /
         static_cast<double>(record.decisions);
}

std::optional<int> first_optimal_episode(
    const std::vector<EpisodeRecord>& episodes, int optimal_steps) {
  for (const EpisodeRecord& e : episodes)
    if (e.steps == optimal_steps) return e.index;
  return std::nullopt;
}

long long total_steps_before_optimal(
    const std::vector<EpisodeRecord>& episodes, int optimal_steps) {
  long long total = 0;
  for (const EpisodeRecord& e : episodes) {
    if (e.steps == optimal_steps) return total;
    total += e.steps;
  }
  return total;
}

namespace {

// First-visit log of one episode: position -> cumulative step count at the
// first time the agent stood there.
class VisitLog {
 public:
  VisitLog(int width, int height)
      : width_(width), first_visit_(static_cast<std::size_t>(width) * height,
                                    -1) {}

  void record(GridPos pos, int steps) {
    int& slot = first_visit_[static_cast<std::size_t>(pos.y) * width_ + pos.x];
    if (slot < 0) {
      slot = steps;
      order_.push_back(pos);
    }
  }

  // Remaining-steps trajectory in visit order, given the episode total.
  std::vector<PosRemaining> trajectory(int total_steps) const {
    std::vector<PosRemaining> t;
    t.reserve(order_.size());
    for (GridPos pos : order_) {
      const int at =
          first_visit_[static_cast<std::size_t>(pos.y) * width_ + pos.x];
      t.push_back({pos, total_steps - at});
    }
    return t;
  }

 private:
  int width_;
  std::vector<int> first_visit_;
  std::vector<GridPos> order_;
};

EpisodeRecord run_standard_episode(const GridWorld& world, QTable& q,
                                   const LearningParams& params,
                                   SplitMix64& rng, int episode_index,
                                   int step_cap) {
  EpisodeRecord rec;
  rec.index = episode_index;
  GridPos pos = world.start();
  bool done = false;
  while (!done && rec.steps < step_cap) {
    bool explored = false;
    const Action a = epsilon_greedy(q, pos, params, rng, &explored);
    const StepResult sr = world.step(pos, a);
    td_update(q, pos, a, sr.reward, sr.next, params);
    pos = sr.next;
    done = sr.done;
    rec.steps += 1;
    rec.decisions += 1;
    if (explored) rec.random_decisions += 1;
  }
  if (!done) {
    rec.truncated = true;
    rec.steps = step_cap;
  }
  return rec;
}

EpisodeRecord run_affective_episode(const GridWorld& world, QTable& q,
                                    AppraisalState& appraisal,
                                    const LearningParams& params,
                                    SplitMix64& rng, int episode_index,
                                    int step_cap) {
  EpisodeRecord rec;
  rec.index = episode_index;
  appraisal.begin_episode(episode_index);
  rec.norm = appraisal.norm();

  VisitLog visits(world.width(), world.height());
  GridPos pos = world.start();
  visits.record(pos, 0);
  bool done = false;
  while (!done && rec.steps < step_cap) {
    appraisal.on_step(rec.steps, pos);
    const Emotion emotion = classify_emotion(appraisal.act(), appraisal.exp1(),
                                             appraisal.norm());
    const MoveDecision decision = decide(emotion, q, pos, rng);
    const MoveOutcome move = execute_move(world, q, pos, decision, params);
    for (int i = 0; i < move.cells_moved; ++i)
      visits.record(move.path[i], rec.steps + i + 1);
    pos = move.final_pos;
    done = move.done;
    // A zero-displacement decision still costs one step, so stalling is
    // never free.
    rec.steps += std::max(move.cells_moved, 1);
    rec.decisions += 1;
    rec.emotion_tally[static_cast<int>(emotion)] += 1;
    if (emotion == Emotion::Joy) rec.random_decisions += 1;
  }
  if (!done) {
    rec.truncated = true;
    rec.steps = step_cap;
  }
  rec.exp1_final = appraisal.exp1();
  rec.act_final = appraisal.act();

  const std::vector<PosRemaining> trajectory = visits.trajectory(rec.steps);
  appraisal.end_episode(rec.steps, trajectory, done);
  return rec;
}

}  // namespace

EpisodeRecord run_episode(const GridWorld& world, AgentKind kind, QTable& q,
                          AppraisalState* appraisal,
                          const LearningParams& params, SplitMix64& rng,
                          int episode_index, int step_cap) {
  if (kind == AgentKind::Standard)
    return run_standard_episode(world, q, params, rng, episode_index,
                                step_cap);
  if (!appraisal)
    throw std::invalid_argument("affective episode needs an appraisal state");
  return run_affective_episode(world, q, *appraisal, params, rng,
                               episode_index, step_cap);
}

RunSummary run_agent(const SimConfig& config, AgentKind kind, double epsilon,
                     std::uint64_t seed) {
  const GridWorld world = config.make_world();
  const LearningParams params{config.alpha, config.gamma, epsilon};
  validate(params);
  QTable q(config.width, config.height);
  AppraisalState appraisal(config.width, config.height,
                           config.bootstrap_norm_factor *
                               world.optimal_steps());
  SplitMix64 rng(seed);

  RunSummary run;
  run.agent_kind = kind;
  run.epsilon = epsilon;
  run.seed = seed;
  run.episodes.reserve(static_cast<std::size_t>(config.episodes));
  for (int i = 1; i <= config.episodes; ++i)
    run.episodes.push_back(run_episode(world, kind, q, &appraisal, params, rng,
                                       i, config.step_cap));
  run.first_optimal_episode =
      first_optimal_episode(run.episodes, world.optimal_steps());
  run.total_steps_before_optimal =
      total_steps_before_optimal(run.episodes, world.optimal_steps());
  return run;
}

std::size_t SweepTable::cell_index(AgentKind kind, std::size_t epsilon_index,
                                   std::size_t run_index) const {
  const std::size_t runs = static_cast<std::size_t>(config.runs);
  return (static_cast<std::size_t>(kind) * config.epsilon_list.size() +
          epsilon_index) *
             runs +
         run_index;
}

const RunSummary& SweepTable::cell(AgentKind kind, std::size_t epsilon_index,
                                   std::size_t run_index) const {
  return cells.at(cell_index(kind, epsilon_index, run_index));
}

SweepTable sweep(const SimConfig& config) {
  config.validate();
  SweepTable table;
  table.config = config;

  const std::size_t n_eps = config.epsilon_list.size();
  const std::size_t n_runs = static_cast<std::size_t>(config.runs);
  const std::size_t n_cells = 2 * n_eps * n_runs;
  table.cells.resize(n_cells);

  auto run_cell = [&](std::size_t cell) {
    const std::size_t run_i = cell % n_runs;
    const std::size_t eps_i = (cell / n_runs) % n_eps;
    const AgentKind kind = static_cast<AgentKind>(cell / (n_runs * n_eps));
    const std::uint64_t seed = derive_seed(
        config.master_seed, static_cast<std::uint64_t>(kind),
        config.tie_epsilon_seeds ? 0 : eps_i, run_i);
    table.cells[cell] =
        run_agent(config, kind, config.epsilon_list[eps_i], seed);
  };

  unsigned n_threads = config.threads == 0
                           ? std::max(1u, std::thread::hardware_concurrency())
                           : static_cast<unsigned>(config.threads);
  n_threads = std::min<unsigned>(n_threads, n_cells);
  if (n_threads <= 1) {
    for (std::size_t cell = 0; cell < n_cells; ++cell) run_cell(cell);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t cell = next.fetch_add(1);
        if (cell >= n_cells) return;
        run_cell(cell);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return table;
}

SweepAggregates aggregate(const SweepTable& table) {
  const SimConfig& cfg = table.config;
  const std::size_t n_eps = cfg.epsilon_list.size();
  const std::size_t n_runs = static_cast<std::size_t>(cfg.runs);
  const std::size_t n_episodes = static_cast<std::size_t>(cfg.episodes);

  SweepAggregates agg;
  agg.epsilons = cfg.epsilon_list;
  agg.mean_steps_standard.assign(n_eps, 0.0);
  agg.mean_steps_affective.assign(n_eps, 0.0);
  agg.mean_total_standard.assign(n_eps, 0.0);
  agg.mean_total_affective.assign(n_eps, 0.0);
  agg.emotion_fractions.assign(n_episodes, {});
  agg.equivalent_epsilon.assign(n_episodes, 0.0);

  for (AgentKind kind : {AgentKind::Standard, AgentKind::Affective}) {
    const bool affective = kind == AgentKind::Affective;
    std::vector<double>& mean_steps =
        affective ? agg.mean_steps_affective : agg.mean_steps_standard;
    std::vector<double>& mean_total =
        affective ? agg.mean_total_affective : agg.mean_total_standard;
    for (std::size_t e = 0; e < n_eps; ++e) {
      double steps_sum = 0.0;
      double total_sum = 0.0;
      for (std::size_t r = 0; r < n_runs; ++r) {
        const RunSummary& run = table.cell(kind, e, r);
        for (const EpisodeRecord& ep : run.episodes) steps_sum += ep.steps;
        total_sum += static_cast<double>(run.total_steps_before_optimal);
      }
      mean_steps[e] = steps_sum / static_cast<double>(n_runs * n_episodes);
      mean_total[e] = total_sum / static_cast<double>(n_runs);
    }
  }

  const double n_affective_runs = static_cast<double>(n_eps * n_runs);
  long long first_optimal_sum = 0;
  for (std::size_t e = 0; e < n_eps; ++e) {
    for (std::size_t r = 0; r < n_runs; ++r) {
      const RunSummary& run = table.cell(AgentKind::Affective, e, r);
      for (std::size_t i = 0; i < n_episodes; ++i) {
        const EpisodeRecord& ep = run.episodes[i];
        if (ep.decisions > 0) {
          const double inv = 1.0 / static_cast<double>(ep.decisions);
          for (std::size_t k = 0; k < ep.emotion_tally.size(); ++k)
            agg.emotion_fractions[i][k] += ep.emotion_tally[k] * inv;
        }
        agg.equivalent_epsilon[i] += equivalent_epsilon(ep);
      }
      agg.affective_runs_total += 1;
      if (run.first_optimal_episode) {
        agg.affective_runs_with_optimal += 1;
        first_optimal_sum += *run.first_optimal_episode;
      }
    }
  }
  for (std::size_t i = 0; i < n_episodes; ++i) {
    for (double& f : agg.emotion_fractions[i]) f /= n_affective_runs;
    agg.equivalent_epsilon[i] /= n_affective_runs;
  }
  if (agg.affective_runs_with_optimal > 0)
    agg.affective_mean_first_optimal =
        static_cast<double>(first_optimal_sum) /
        static_cast<double>(agg.affective_runs_with_optimal);
  return agg;
}

}  // namespace affectq
