#include "medoids/bandit.hpp"

#include "medoids/errors.hpp"
#include "medoids/kahan.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace medoids {

namespace {

// Reference chunk for exact passes; bounds the arms x refs scratch buffer.
constexpr std::size_t kExactChunk = 256;

}  // namespace

double SearchConfig::delta_for(std::size_t target_count) const {
    if (delta) {
        return *delta;
    }
    return 1.0 / (1000.0 * static_cast<double>(std::max<std::size_t>(target_count, 1)));
}

void SearchConfig::validate() const {
    if (batch_size < 1) {
        throw ArgumentError("batch size must be >= 1");
    }
    if (delta && !(*delta > 0.0 && *delta < 1.0)) {
        throw ArgumentError("delta must lie in (0, 1); got " + std::to_string(*delta));
    }
    if (!(ci_multiplier >= 0.0)) {
        throw ArgumentError("confidence multiplier must be non-negative");
    }
    if (!(sigma_floor >= 0.0)) {
        throw ArgumentError("sigma floor must be non-negative");
    }
}

double population_std(std::span<const double> values, double floor) {
    if (values.empty()) {
        throw ArgumentError("standard deviation of an empty sample");
    }
    const double count = static_cast<double>(values.size());
    const double mean  = std::accumulate(values.begin(), values.end(), 0.0) / count;
    double       ss    = 0.0;
    for (const double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return std::max(std::sqrt(ss / count), floor);
}

SigmaEstimate estimate_sigmas(const ArmEvaluator&           evaluator,
                              std::span<const std::size_t> arms,
                              std::span<const std::size_t> first_batch,
                              double                       sigma_floor,
                              Phase                        phase) {
    if (first_batch.empty()) {
        throw ArgumentError("sigma estimation needs a non-empty batch");
    }
    SigmaEstimate estimate;
    estimate.g_values.resize(arms.size() * first_batch.size());
    evaluator.evaluate(arms, first_batch, phase, estimate.g_values);
    estimate.sigmas.reserve(arms.size());
    for (std::size_t a = 0; a < arms.size(); ++a) {
        const auto row = std::span<const double>(estimate.g_values).subspan(a * first_batch.size(), first_batch.size());
        estimate.sigmas.push_back(population_std(row, sigma_floor));
    }
    return estimate;
}

double confidence_radius(double sigma, double delta, std::size_t n_used, double ci_multiplier) {
    if (n_used == 0) {
        throw ArgumentError("confidence radius needs at least one sample");
    }
    if (std::isinf(ci_multiplier)) {
        return std::numeric_limits<double>::infinity();
    }
    return ci_multiplier * sigma * std::sqrt(std::log(1.0 / delta) / static_cast<double>(n_used));
}

std::vector<double> exact_sums(const ArmEvaluator& evaluator, std::span<const std::size_t> arms, Phase phase) {
    const std::size_t     refs = evaluator.reference_count();
    std::vector<KahanSum> sums(arms.size());
    std::vector<std::size_t> chunk;
    std::vector<double>      values;
    for (std::size_t begin = 0; begin < refs; begin += kExactChunk) {
        const std::size_t end = std::min(refs, begin + kExactChunk);
        chunk.resize(end - begin);
        std::iota(chunk.begin(), chunk.end(), begin);
        values.resize(arms.size() * chunk.size());
        evaluator.evaluate(arms, chunk, phase, values);
        for (std::size_t a = 0; a < arms.size(); ++a) {
            for (std::size_t r = 0; r < chunk.size(); ++r) {
                sums[a].add(values[a * chunk.size() + r]);
            }
        }
    }
    std::vector<double> out;
    out.reserve(arms.size());
    for (const auto& sum : sums) {
        out.push_back(sum.value());
    }
    return out;
}

SearchResult adaptive_search(const ArmEvaluator& evaluator,
                             const SearchConfig& config,
                             SearchRng&          rng,
                             Phase               search_phase) {
    config.validate();
    const std::size_t targets = evaluator.target_count();
    const std::size_t refs    = evaluator.reference_count();
    if (targets < 1 || refs < 1) {
        throw ArgumentError("adaptive search needs at least one target and one reference");
    }

    SearchResult result;
    result.arms.resize(targets);
    if (targets == 1) {
        return result;
    }

    const double delta      = config.delta_for(targets);
    const std::size_t batch = config.batch_size;

    std::vector<std::size_t> alive(targets);
    std::iota(alive.begin(), alive.end(), 0);
    std::vector<KahanSum> sums(targets);

    std::uniform_int_distribution<std::size_t> pick(0, refs - 1);
    std::vector<std::size_t>                   batch_refs(batch);
    std::vector<double>                        values;

    std::size_t n_used = 0;
    while (n_used < refs && alive.size() > 1) {
        // indices are drawn before any evaluation so the stream does not
        // depend on how arms are evaluated
        for (auto& ref : batch_refs) {
            ref = pick(rng);
        }

        if (result.iterations == 0) {
            auto estimate = estimate_sigmas(evaluator, alive, batch_refs, config.sigma_floor);
            for (std::size_t a = 0; a < alive.size(); ++a) {
                result.arms[alive[a]].sigma = estimate.sigmas[a];
            }
            values = std::move(estimate.g_values);
        } else {
            values.resize(alive.size() * batch);
            evaluator.evaluate(alive, batch_refs, search_phase, values);
        }
        result.g_calls += alive.size() * batch;

        double best_upper = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < alive.size(); ++a) {
            ArmStats& arm = result.arms[alive[a]];
            for (std::size_t r = 0; r < batch; ++r) {
                sums[alive[a]].add(values[a * batch + r]);
            }
            arm.n_sampled += batch;
            arm.mean_est  = sums[alive[a]].value() / static_cast<double>(arm.n_sampled);
            arm.ci_radius = confidence_radius(arm.sigma, delta, n_used + batch, config.ci_multiplier);
            best_upper    = std::min(best_upper, arm.mean_est + arm.ci_radius);
        }
        std::erase_if(alive, [&](std::size_t index) {
            ArmStats& arm = result.arms[index];
            if (arm.mean_est - arm.ci_radius > best_upper) {
                arm.alive = false;
                return true;
            }
            return false;
        });
        n_used += batch;
        ++result.iterations;
    }

    if (alive.size() == 1) {
        result.winner = alive.front();
        return result;
    }

    result.used_exact_fallback = true;
    const auto sums_exact      = exact_sums(evaluator, alive, Phase::exact_fallback);
    result.g_calls += alive.size() * refs;
    std::size_t best = 0;
    for (std::size_t a = 0; a < alive.size(); ++a) {
        ArmStats& arm = result.arms[alive[a]];
        arm.mean_est  = sums_exact[a] / static_cast<double>(refs);
        arm.ci_radius = 0.0;
        arm.exact     = true;
        if (sums_exact[a] < sums_exact[best]) {
            best = a;
        }
    }
    result.winner           = alive[best];
    result.winner_exact_sum = sums_exact[best];
    return result;
}

}  // namespace medoids
