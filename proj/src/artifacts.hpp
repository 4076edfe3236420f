/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "experiment.hpp"
#include "stats.hpp"

namespace affectq {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

// Shortest representation that parses back to the same double, so emitted
// files are stable golden inputs.
std::string format_double(double v);

// Creates parent directories, writes to a temporary sibling, then renames:
// a file either appears complete or not at all. Throws IoError.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

// Per-episode table of a single run. Header:
//   episode,steps,decisions,random_decisions,joy,sadness,anger,fear,
//   norm,exp1,act,truncated
std::string episodes_csv(const RunSummary& run);
std::string episodes_json(const RunSummary& run);

void write_run_artifacts(const RunSummary& run,
                         const std::filesystem::path& path,
                         OutputFormat format);

// JSON object mirroring a spreadsheet paired t-test report.
std::string t_test_json(const TTestResult& test, std::string_view label_a,
                        std::string_view label_b);

// The full sweep artifact set: sweep_summary.csv, fig3.csv (mean steps per
// episode vs epsilon), fig4.csv (total steps before optimal vs epsilon),
// fig5.csv (emotion profile per episode), fig6.csv (equivalent epsilon per
// episode) and tables.json (paired t-tests over the per-epsilon means plus
// a config echo).
void write_sweep_artifacts(const SweepTable& table,
                           const std::filesystem::path& dir);

}  // namespace affectq
