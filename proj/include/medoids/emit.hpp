#pragma once

#include "medoids/experiments.hpp"
#include "medoids/result.hpp"

#include <filesystem>
#include <ostream>
#include <span>
#include <string_view>

#include "json.hpp"

namespace medoids {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(std::string_view name);

/// Column order of every experiment table. wall_time_ms is last and is the
/// only nondeterministic column.
inline constexpr std::string_view kRecordColumns[] = {
    "n",          "k",    "metric",   "algorithm", "seed", "loss", "loss_ratio_vs_pam", "swap_count",
    "distance_evals_total", "distance_evals_per_iteration", "wall_time_ms"};

void write_records_csv(std::ostream& out, std::span<const ExperimentRecord> records);
nlohmann::ordered_json records_to_json(std::span<const ExperimentRecord> records);
void emit(std::span<const ExperimentRecord> records, OutputFormat format, const std::filesystem::path& path);

/// Reads back a table written by write_records_csv.
std::vector<ExperimentRecord> read_records_csv(std::istream& in);

nlohmann::ordered_json fit_to_json(const FitResult& fit, std::uint64_t seed);
/// One header line plus one row per point: point,medoid,is_medoid.
void write_fit_csv(std::ostream& out, const FitResult& fit);

}  // namespace medoids
