#include "medoids/emit.hpp"

#include "medoids/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

namespace medoids {

namespace {

// Shortest representation that reads back to the same double.
std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

template <typename T>
T parse_number(const std::string& cell) {
    T value{};
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        throw ParseError("not a number: '" + cell + "'", 0, 0);
    }
    return value;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw ArgumentError("unknown output format: " + std::string(name));
}

void write_records_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
    for (std::size_t c = 0; c < std::size(kRecordColumns); ++c) {
        out << (c ? "," : "") << kRecordColumns[c];
    }
    out << '\n';
    for (const auto& r : records) {
        out << r.n << ',' << r.k << ',' << r.metric << ',' << r.algorithm << ',' << r.seed << ','
            << format_double(r.loss) << ',' << format_double(r.loss_ratio_vs_pam) << ',' << r.swap_count << ','
            << r.distance_evals_total << ',' << format_double(r.distance_evals_per_iteration) << ','
            << format_double(r.wall_time_ms) << '\n';
    }
}

nlohmann::ordered_json records_to_json(std::span<const ExperimentRecord> records) {
    auto array = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        array.push_back({{"n", r.n},
                         {"k", r.k},
                         {"metric", r.metric},
                         {"algorithm", r.algorithm},
                         {"seed", r.seed},
                         {"loss", r.loss},
                         {"loss_ratio_vs_pam", r.loss_ratio_vs_pam},
                         {"swap_count", r.swap_count},
                         {"distance_evals_total", r.distance_evals_total},
                         {"distance_evals_per_iteration", r.distance_evals_per_iteration},
                         {"wall_time_ms", r.wall_time_ms}});
    }
    return array;
}

void emit(std::span<const ExperimentRecord> records, OutputFormat format, const std::filesystem::path& path) {
    auto out = open_out(path);
    if (format == OutputFormat::csv) {
        write_records_csv(out, records);
    } else {
        out << records_to_json(records).dump(2) << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

std::vector<ExperimentRecord> read_records_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("missing header", 1, 0);
    }
    std::vector<ExperimentRecord> records;
    for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream        row(line);
        for (std::string cell; std::getline(row, cell, ',');) {
            cells.push_back(cell);
        }
        if (cells.size() != std::size(kRecordColumns)) {
            throw ParseError("line " + std::to_string(line_no) + ": wrong column count", line_no, 0);
        }
        ExperimentRecord r;
        r.n                            = parse_number<std::size_t>(cells[0]);
        r.k                            = parse_number<std::size_t>(cells[1]);
        r.metric                       = cells[2];
        r.algorithm                    = cells[3];
        r.seed                         = parse_number<std::uint64_t>(cells[4]);
        r.loss                         = parse_number<double>(cells[5]);
        r.loss_ratio_vs_pam            = parse_number<double>(cells[6]);
        r.swap_count                   = parse_number<std::size_t>(cells[7]);
        r.distance_evals_total         = parse_number<std::uint64_t>(cells[8]);
        r.distance_evals_per_iteration = parse_number<double>(cells[9]);
        r.wall_time_ms                 = parse_number<double>(cells[10]);
        records.push_back(std::move(r));
    }
    return records;
}

nlohmann::ordered_json fit_to_json(const FitResult& fit, std::uint64_t seed) {
    nlohmann::ordered_json phases = nlohmann::ordered_json::object();
    for (std::size_t p = 0; p < kPhaseCount; ++p) {
        phases[std::string(phase_name(static_cast<Phase>(p)))] = fit.distance_evals.counts[p];
    }
    auto trajectory = nlohmann::ordered_json::array();
    for (const auto& event : fit.trajectory) {
        nlohmann::ordered_json item = {{"kind", event_kind_name(event.kind)}};
        if (event.kind == EventKind::build_add) {
            item["chosen"] = event.chosen;
        } else if (event.kind == EventKind::swap) {
            item["medoid_out"] = event.chosen;
            item["point_in"]   = event.swapped_in;
        }
        item["loss_after"]          = event.loss_after;
        item["eval_count_snapshot"] = event.eval_count_snapshot;
        trajectory.push_back(std::move(item));
    }
    nlohmann::ordered_json config = {
        {"algorithm", fit.algorithm}, {"k", fit.k}, {"metric", metric_name(fit.metric)}, {"seed", seed}};
    if (fit.search_config) {
        const auto& search     = *fit.search_config;
        config["batch_size"]   = search.batch_size;
        config["delta"]        = search.delta ? nlohmann::ordered_json(*search.delta) : nlohmann::ordered_json("auto");
        config["ci_multiplier"] = std::isinf(search.ci_multiplier) ? nlohmann::ordered_json("inf")
                                                                   : nlohmann::ordered_json(search.ci_multiplier);
        config["sigma_floor"]  = search.sigma_floor;
        config["verify_swaps"] = search.verify_swaps;
    }
    return {{"medoid_indices", fit.medoids},
            {"labels", fit.assignments},
            {"loss", fit.loss},
            {"swap_count", fit.swap_count},
            {"distance_evals", fit.distance_evals.total()},
            {"distance_evals_by_phase", phases},
            {"trajectory", trajectory},
            {"config", config}};
}

void write_fit_csv(std::ostream& out, const FitResult& fit) {
    out << "# algorithm=" << fit.algorithm << " k=" << fit.k << " metric=" << metric_name(fit.metric)
        << " loss=" << format_double(fit.loss) << " swap_count=" << fit.swap_count
        << " distance_evals=" << fit.distance_evals.total() << '\n';
    out << "point,medoid,is_medoid\n";
    std::vector<bool> is_medoid(fit.assignments.size(), false);
    for (const auto m : fit.medoids) {
        is_medoid[m] = true;
    }
    for (std::size_t j = 0; j < fit.assignments.size(); ++j) {
        out << j << ',' << fit.assignments[j] << ',' << (is_medoid[j] ? 1 : 0) << '\n';
    }
}

}  // namespace medoids
