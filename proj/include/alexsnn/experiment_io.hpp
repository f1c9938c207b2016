#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "alexsnn/experiments.hpp"
#include "alexsnn/train_csv.hpp"

namespace alexsnn {

/// "inf" or the shortest round-trip decimal.
std::string format_alpha(LeakRate alpha);
/// Accepts "inf" or a non-negative decimal; std::nullopt otherwise.
std::optional<LeakRate> parse_alpha(std::string_view text);

/// Parses the JSON experiment config. Every field is optional and falls back
/// to the ExperimentConfig default; unknown keys and ill-typed values raise
/// FormatError.
ExperimentConfig parse_experiment_config(std::string_view json_text);
ExperimentConfig read_experiment_config(const std::filesystem::path& path);

/// Columns: mode,alpha,n,run,error_norm (full precision).
void write_results_csv(std::span<const TrialRecord> records, std::ostream& out);

/// One row per cell, 12 significant digits:
/// mode,alpha,n,n_samples,mean,max,violations,median,q1,q3,whisker_low,whisker_high,n_outliers
void write_stats_csv(std::span<const CellSummary> cells, std::ostream& out);

/// Writes results.csv and stats.csv into out_dir and, if svg_dir is set, one
/// boxplot per (mode, alpha) named `box_<mode>_alpha_<alpha>.svg`.
void write_experiment_outputs(const ExperimentConfig& config,
                              std::span<const TrialRecord> records,
                              const std::filesystem::path& out_dir,
                              const std::optional<std::filesystem::path>& svg_dir);

}  // namespace alexsnn
