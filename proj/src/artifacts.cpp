/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "artifacts.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include "json.hpp"

namespace affectq {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc())
    throw std::invalid_argument("could not format double");
  return std::string(buf, ptr);
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  std::error_code ec;
  const std::filesystem::path parent = path.parent_path();
  if (!parent.empty()) {
    std::filesystem::create_directories(parent, ec);
    if (ec)
      throw IoError("could not create directory " + parent.string() + ": " +
                    ec.message());
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("could not open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp, ec);
      throw IoError("write failed for " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw IoError("could not rename " + tmp.string() + " to " + path.string() +
                  ": " + ec.message());
  }
}

namespace {

constexpr std::string_view kEpisodesHeader =
    "episode,steps,decisions,random_decisions,joy,sadness,anger,fear,norm,"
    "exp1,act,truncated\n";

void append_episode_row(std::string& out, const EpisodeRecord& ep) {
  out += std::to_string(ep.index);
  out += ',';
  out += std::to_string(ep.steps);
  out += ',';
  out += std::to_string(ep.decisions);
  out += ',';
  out += std::to_string(ep.random_decisions);
  for (Emotion e : kAllEmotions) {
    out += ',';
    out += std::to_string(ep.emotion_tally[static_cast<int>(e)]);
  }
  out += ',';
  out += format_double(ep.norm);
  out += ',';
  out += format_double(ep.exp1_final);
  out += ',';
  out += format_double(ep.act_final);
  out += ',';
  out += ep.truncated ? '1' : '0';
  out += '\n';
}

ordered_json episode_to_json(const EpisodeRecord& ep) {
  ordered_json j;
  j["episode"] = ep.index;
  j["steps"] = ep.steps;
  j["decisions"] = ep.decisions;
  j["random_decisions"] = ep.random_decisions;
  for (Emotion e : kAllEmotions)
    j[to_string(e)] = ep.emotion_tally[static_cast<int>(e)];
  j["norm"] = ep.norm;
  j["exp1"] = ep.exp1_final;
  j["act"] = ep.act_final;
  j["truncated"] = ep.truncated;
  return j;
}

ordered_json t_test_to_json(const TTestResult& t, std::string_view label_a,
                            std::string_view label_b) {
  ordered_json j;
  j["label_a"] = label_a;
  j["label_b"] = label_b;
  j["mean_a"] = t.mean_a;
  j["mean_b"] = t.mean_b;
  j["variance_a"] = t.var_a;
  j["variance_b"] = t.var_b;
  j["observations"] = t.n;
  if (std::isfinite(t.pearson))
    j["pearson_correlation"] = t.pearson;
  else
    j["pearson_correlation"] = nullptr;
  j["hypothesized_mean_difference"] = 0.0;
  j["df"] = t.df;
  j["t_stat"] = t.t_stat;
  j["p_one_tail"] = t.p_one_tail;
  j["t_critical_one_tail"] = t.t_crit_one_tail;
  j["p_two_tail"] = t.p_two_tail;
  j["t_critical_two_tail"] = t.t_crit_two_tail;
  return j;
}

ordered_json config_echo(const SimConfig& cfg) {
  ordered_json j;
  j["width"] = cfg.width;
  j["height"] = cfg.height;
  j["start"] = {cfg.start.x, cfg.start.y};
  j["goal"] = {cfg.goal.x, cfg.goal.y};
  j["alpha"] = cfg.alpha;
  j["gamma"] = cfg.gamma;
  j["goal_reward"] = cfg.goal_reward;
  j["episodes"] = cfg.episodes;
  j["runs"] = cfg.runs;
  j["epsilon_list"] = cfg.epsilon_list;
  j["master_seed"] = cfg.master_seed;
  j["step_cap"] = cfg.step_cap;
  j["bootstrap_norm_factor"] = cfg.bootstrap_norm_factor;
  j["tie_epsilon_seeds"] = cfg.tie_epsilon_seeds;
  return j;
}

}  // namespace

std::string episodes_csv(const RunSummary& run) {
  std::string out{kEpisodesHeader};
  for (const EpisodeRecord& ep : run.episodes) append_episode_row(out, ep);
  return out;
}

std::string episodes_json(const RunSummary& run) {
  ordered_json j;
  j["agent"] = to_string(run.agent_kind);
  j["epsilon"] = run.epsilon;
  j["seed"] = run.seed;
  if (run.first_optimal_episode)
    j["first_optimal_episode"] = *run.first_optimal_episode;
  else
    j["first_optimal_episode"] = nullptr;
  j["total_steps_before_optimal"] = run.total_steps_before_optimal;
  ordered_json episodes = ordered_json::array();
  for (const EpisodeRecord& ep : run.episodes)
    episodes.push_back(episode_to_json(ep));
  j["episodes"] = std::move(episodes);
  return j.dump(2) + "\n";
}

void write_run_artifacts(const RunSummary& run,
                         const std::filesystem::path& path,
                         OutputFormat format) {
  write_file_atomic(path, format == OutputFormat::Csv ? episodes_csv(run)
                                                      : episodes_json(run));
}

std::string t_test_json(const TTestResult& test, std::string_view label_a,
                        std::string_view label_b) {
  return t_test_to_json(test, label_a, label_b).dump(2) + "\n";
}

void write_sweep_artifacts(const SweepTable& table,
                           const std::filesystem::path& dir) {
  const SimConfig& cfg = table.config;
  const SweepAggregates agg = aggregate(table);
  const std::size_t n_eps = cfg.epsilon_list.size();
  const std::size_t n_runs = static_cast<std::size_t>(cfg.runs);

  std::string summary =
      "agent,epsilon,run,first_optimal_episode,total_steps_before_optimal,"
      "mean_steps_per_episode\n";
  for (AgentKind kind : {AgentKind::Standard, AgentKind::Affective}) {
    for (std::size_t e = 0; e < n_eps; ++e) {
      for (std::size_t r = 0; r < n_runs; ++r) {
        const RunSummary& run = table.cell(kind, e, r);
        long long steps_sum = 0;
        for (const EpisodeRecord& ep : run.episodes) steps_sum += ep.steps;
        const double mean_steps =
            static_cast<double>(steps_sum) /
            static_cast<double>(run.episodes.size());
        summary += to_string(kind);
        summary += ',';
        summary += format_double(run.epsilon);
        summary += ',';
        summary += std::to_string(r + 1);
        summary += ',';
        if (run.first_optimal_episode)
          summary += std::to_string(*run.first_optimal_episode);
        summary += ',';
        summary += std::to_string(run.total_steps_before_optimal);
        summary += ',';
        summary += format_double(mean_steps);
        summary += '\n';
      }
    }
  }
  write_file_atomic(dir / "sweep_summary.csv", summary);

  std::string fig3 = "epsilon,mean_steps_standard,mean_steps_affective\n";
  std::string fig4 = "epsilon,total_standard,total_affective\n";
  for (std::size_t e = 0; e < n_eps; ++e) {
    fig3 += format_double(cfg.epsilon_list[e]);
    fig3 += ',';
    fig3 += format_double(agg.mean_steps_standard[e]);
    fig3 += ',';
    fig3 += format_double(agg.mean_steps_affective[e]);
    fig3 += '\n';
    fig4 += format_double(cfg.epsilon_list[e]);
    fig4 += ',';
    fig4 += format_double(agg.mean_total_standard[e]);
    fig4 += ',';
    fig4 += format_double(agg.mean_total_affective[e]);
    fig4 += '\n';
  }
  write_file_atomic(dir / "fig3.csv", fig3);
  write_file_atomic(dir / "fig4.csv", fig4);

  std::string fig5 = "episode,joy_frac,sadness_frac,anger_frac,fear_frac\n";
  std::string fig6 = "episode,equivalent_epsilon\n";
  for (std::size_t i = 0; i < agg.emotion_fractions.size(); ++i) {
    fig5 += std::to_string(i + 1);
    for (Emotion e : kAllEmotions) {
      fig5 += ',';
      fig5 += format_double(agg.emotion_fractions[i][static_cast<int>(e)]);
    }
    fig5 += '\n';
    fig6 += std::to_string(i + 1);
    fig6 += ',';
    fig6 += format_double(agg.equivalent_epsilon[i]);
    fig6 += '\n';
  }
  write_file_atomic(dir / "fig5.csv", fig5);
  write_file_atomic(dir / "fig6.csv", fig6);

  // Pairs the per-epsilon means of both agents; undefined for sweeps with
  // fewer than two epsilon cells or constant differences.
  const auto t_test_or_null = [](std::span<const double> xs,
                                 std::span<const double> ys) -> ordered_json {
    try {
      return t_test_to_json(paired_t_test(xs, ys), "standard", "affective");
    } catch (const std::exception&) {
      return nullptr;
    }
  };

  ordered_json tables;
  tables["config"] = config_echo(cfg);
  tables["steps_per_episode"] =
      t_test_or_null(agg.mean_steps_standard, agg.mean_steps_affective);
  tables["total_steps_before_optimal"] =
      t_test_or_null(agg.mean_total_standard, agg.mean_total_affective);
  tables["affective_mean_first_optimal"] =
      agg.affective_runs_with_optimal > 0
          ? ordered_json(agg.affective_mean_first_optimal)
          : ordered_json(nullptr);
  tables["affective_runs_with_optimal"] = agg.affective_runs_with_optimal;
  tables["affective_runs_total"] = agg.affective_runs_total;
  write_file_atomic(dir / "tables.json", tables.dump(2) + "\n");
}

}  // namespace affectq
