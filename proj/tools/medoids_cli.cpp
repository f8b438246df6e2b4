#include "medoids/banditpam.hpp"
#include "medoids/emit.hpp"
#include "medoids/errors.hpp"
#include "medoids/experiments.hpp"
#include "medoids/io.hpp"
#include "medoids/synthetic.hpp"
#include "medoids/version.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

namespace {

using namespace medoids;

struct SolverFlags {
    std::size_t k           = 0;
    std::string algo        = "banditpam";
    std::uint64_t seed      = 0;
    std::size_t batch_size  = 100;
    double      delta       = 0.0;
    std::string ci_mult     = "1";
    std::size_t max_swaps   = 100;
    std::string verify      = "on";
    std::string metric      = "l2";

    RunOptions options() const {
        RunOptions opts;
        opts.search.batch_size = batch_size;
        if (delta > 0.0) {
            opts.search.delta = delta;
        }
        if (ci_mult == "inf") {
            opts.search.ci_multiplier = std::numeric_limits<double>::infinity();
        } else {
            try {
                std::size_t used          = 0;
                opts.search.ci_multiplier = std::stod(ci_mult, &used);
                if (used != ci_mult.size()) throw std::invalid_argument(ci_mult);
            } catch (const std::exception&) {
                throw ArgumentError("--ci-mult expects a number or 'inf', got '" + ci_mult + "'");
            }
        }
        if (verify != "on" && verify != "off") {
            throw ArgumentError("--verify-swaps expects on or off");
        }
        opts.search.verify_swaps = verify == "on";
        opts.search.seed         = seed;
        opts.max_swaps           = max_swaps;
        opts.search.validate();
        return opts;
    }
};

void add_solver_flags(CLI::App* cmd, SolverFlags& flags, bool with_algo) {
    cmd->add_option("--k", flags.k, "number of medoids")->required();
    if (with_algo) {
        cmd->add_option("--algo", flags.algo, "pam | fastpam1 | banditpam | voronoi");
    }
    cmd->add_option("--seed", flags.seed, "master seed");
    cmd->add_option("--batch-size", flags.batch_size, "references sampled per round");
    cmd->add_option("--delta", flags.delta, "per-arm error probability (default 1/(1000 |arms|))");
    cmd->add_option("--ci-mult", flags.ci_mult, "confidence radius multiplier, or inf");
    cmd->add_option("--max-swaps", flags.max_swaps, "swap iteration cap");
    cmd->add_option("--verify-swaps", flags.verify, "exact re-check of bandit swap winners: on | off");
    cmd->add_option("--metric", flags.metric, "l1 | l2 | cosine | tree-edit");
}

std::vector<std::size_t> parse_grid(const std::string& text) {
    std::vector<std::size_t> grid;
    std::size_t              begin = 0;
    while (begin <= text.size()) {
        const auto end  = text.find(',', begin);
        const auto cell = text.substr(begin, end == std::string::npos ? std::string::npos : end - begin);
        try {
            std::size_t used = 0;
            grid.push_back(std::stoul(cell, &used));
            if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::exception&) {
            throw ArgumentError("bad grid value '" + cell + "'");
        }
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return grid;
}

Dataset load(const std::string& path, const std::string& format) {
    if (format == "csv") return load_vectors_csv(path);
    if (format == "trees") return load_trees(path);
    throw ArgumentError("--format expects csv or trees");
}

OutputFormat output_format(const std::string& name, const std::string& path) {
    if (!name.empty()) return parse_output_format(name);
    return path.size() >= 5 && path.ends_with(".json") ? OutputFormat::json : OutputFormat::csv;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-medoids clustering: PAM, FastPAM1, BanditPAM and Voronoi iteration"};
    app.set_version_flag("--version", std::string(medoids::version()));
    app.require_subcommand(1);

    SolverFlags fit_flags;
    std::string fit_data, fit_format = "csv", fit_out, fit_out_format;
    auto*       fit_cmd = app.add_subcommand("fit", "cluster one dataset");
    fit_cmd->add_option("--data", fit_data, "input file")->required();
    fit_cmd->add_option("--format", fit_format, "csv | trees");
    fit_cmd->add_option("--out", fit_out, "output file")->required();
    fit_cmd->add_option("--out-format", fit_out_format, "csv | json (default from extension)");
    add_solver_flags(fit_cmd, fit_flags, true);

    SolverFlags bench_flags;
    std::string bench_gen = "gaussian", bench_grid, bench_out, bench_out_format;
    std::size_t bench_reps = 1, bench_d = 2, bench_clusters = 5;
    double      bench_std  = 1.0;
    auto*       bench_cmd  = app.add_subcommand("bench-scaling", "distance evaluations per iteration versus n");
    bench_cmd->add_option("--gen", bench_gen, "gaussian | heavytail");
    bench_cmd->add_option("--n-grid", bench_grid, "comma-separated sizes, at least 3")->required();
    bench_cmd->add_option("--reps", bench_reps, "repetitions per size");
    bench_cmd->add_option("--dim", bench_d, "dimensionality");
    bench_cmd->add_option("--clusters", bench_clusters, "mixture components");
    bench_cmd->add_option("--std", bench_std, "cluster standard deviation");
    bench_cmd->add_option("--out", bench_out, "output file")->required();
    bench_cmd->add_option("--out-format", bench_out_format, "csv | json (default from extension)");
    add_solver_flags(bench_cmd, bench_flags, true);

    SolverFlags cmp_flags;
    std::string cmp_data, cmp_format = "csv", cmp_grid, cmp_out, cmp_out_format;
    std::string cmp_algos = "pam,fastpam1,banditpam,voronoi";
    std::size_t cmp_reps  = 1;
    auto*       cmp_cmd   = app.add_subcommand("compare-loss", "loss of each algorithm relative to PAM");
    cmp_cmd->add_option("--data", cmp_data, "input file")->required();
    cmp_cmd->add_option("--format", cmp_format, "csv | trees");
    cmp_cmd->add_option("--n-grid", cmp_grid, "comma-separated subsample sizes")->required();
    cmp_cmd->add_option("--reps", cmp_reps, "subsamples per size");
    cmp_cmd->add_option("--algos", cmp_algos, "comma-separated algorithms");
    cmp_cmd->add_option("--out", cmp_out, "output file")->required();
    cmp_cmd->add_option("--out-format", cmp_out_format, "csv | json (default from extension)");
    add_solver_flags(cmp_cmd, cmp_flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fit_cmd->parsed()) {
            const auto    options = fit_flags.options();
            const Dataset data    = load(fit_data, fit_format);
            const auto    result  = run_algorithm(data, parse_metric(fit_flags.metric), fit_flags.k,
                                                  parse_algorithm(fit_flags.algo), options, fit_flags.seed);
            std::ofstream out(fit_out, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + fit_out);
            if (output_format(fit_out_format, fit_out) == OutputFormat::json) {
                out << fit_to_json(result, fit_flags.seed).dump(2) << '\n';
            } else {
                write_fit_csv(out, result);
            }
        } else if (bench_cmd->parsed()) {
            const auto    options = bench_flags.options();
            SyntheticSpec spec;
            spec.kind        = parse_synthetic_kind(bench_gen);
            spec.d           = bench_d;
            spec.clusters    = bench_clusters;
            spec.cluster_std = bench_std;
            const auto grid   = parse_grid(bench_grid);
            const auto result = run_experiment_scaling(spec, parse_metric(bench_flags.metric), grid, bench_flags.k,
                                                       parse_algorithm(bench_flags.algo), bench_reps,
                                                       bench_flags.seed, options);
            emit(result.records, output_format(bench_out_format, bench_out), bench_out);
            std::cout << "slope " << result.slope << '\n';
        } else if (cmp_cmd->parsed()) {
            const auto    options = cmp_flags.options();
            const Dataset data    = load(cmp_data, cmp_format);
            std::vector<Algorithm> algos;
            for (std::size_t begin = 0; begin <= cmp_algos.size();) {
                const auto end = cmp_algos.find(',', begin);
                algos.push_back(parse_algorithm(
                    cmp_algos.substr(begin, end == std::string::npos ? std::string::npos : end - begin)));
                if (end == std::string::npos) break;
                begin = end + 1;
            }
            const auto grid    = parse_grid(cmp_grid);
            const auto records = run_experiment_loss_ratio(data, parse_metric(cmp_flags.metric), grid, cmp_flags.k,
                                                           algos, cmp_reps, cmp_flags.seed, options);
            emit(records, output_format(cmp_out_format, cmp_out), cmp_out);
        }
    } catch (const medoids::ArgumentError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 2;
    } catch (const medoids::ConfigError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
    return 0;
}
