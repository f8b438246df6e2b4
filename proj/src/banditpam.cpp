#include "medoids/banditpam.hpp"

#include "medoids/deltas.hpp"
#include "medoids/errors.hpp"

#include <string>

namespace medoids {

namespace {

std::vector<std::size_t> non_medoids(const ClusterState& state, std::size_t n) {
    std::vector<bool> taken(n, false);
    for (const auto m : state.medoids) {
        taken[m] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!taken[i]) out.push_back(i);
    }
    return out;
}

}  // namespace

double build_arm_g(const ClusterState& state, const DistanceOracle& oracle, std::size_t candidate, std::size_t j,
                   Phase phase) {
    return build_gain(state, j, oracle.distance(candidate, j, phase));
}

double swap_arm_g(const ClusterState& state, const DistanceOracle& oracle, PairArm arm, std::size_t j, Phase phase) {
    return swap_delta(state, arm.medoid, j, oracle.distance(arm.candidate, j, phase));
}

BuildArms::BuildArms(const ClusterState& state, const DistanceOracle& oracle)
  : state_(state)
  , oracle_(oracle)
  , candidates_(non_medoids(state, oracle.size())) {}

void BuildArms::evaluate(std::span<const std::size_t> arms, std::span<const std::size_t> refs, Phase phase,
                         std::span<double> out) const {
    for (std::size_t a = 0; a < arms.size(); ++a) {
        const std::size_t x = candidates_[arms[a]];
        for (std::size_t r = 0; r < refs.size(); ++r) {
            out[a * refs.size() + r] = build_arm_g(state_, oracle_, x, refs[r], phase);
        }
    }
}

SwapArms::SwapArms(const ClusterState& state, const DistanceOracle& oracle)
  : state_(state)
  , oracle_(oracle)
  , candidates_(non_medoids(state, oracle.size())) {}

PairArm SwapArms::pair(std::size_t arm) const {
    return PairArm{state_.medoids[arm / candidates_.size()], candidates_[arm % candidates_.size()]};
}

void SwapArms::evaluate(std::span<const std::size_t> arms, std::span<const std::size_t> refs, Phase phase,
                        std::span<double> out) const {
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    // one row of distances per distinct candidate among the requested arms
    std::vector<std::size_t> row_of(candidates_.size(), kUnset);
    std::vector<double>      dist;
    std::size_t              rows = 0;
    for (const auto arm : arms) {
        const std::size_t c = arm % candidates_.size();
        if (row_of[c] != kUnset) {
            continue;
        }
        row_of[c] = rows++;
        dist.resize(rows * refs.size());
        for (std::size_t r = 0; r < refs.size(); ++r) {
            dist[row_of[c] * refs.size() + r] = oracle_.distance(candidates_[c], refs[r], phase);
        }
    }
    for (std::size_t a = 0; a < arms.size(); ++a) {
        const std::size_t medoid = state_.medoids[arms[a] / candidates_.size()];
        const std::size_t row    = row_of[arms[a] % candidates_.size()];
        for (std::size_t r = 0; r < refs.size(); ++r) {
            out[a * refs.size() + r] = swap_delta(state_, medoid, refs[r], dist[row * refs.size() + r]);
        }
    }
}

BuildOutput banditpam_build(const DistanceOracle& oracle, std::size_t k, const SearchConfig& config, SearchRng& rng) {
    if (k < 1 || k > oracle.size()) {
        throw ArgumentError("k must be in [1, n]; got k = " + std::to_string(k) + ", n = " +
                            std::to_string(oracle.size()));
    }
    const std::uint64_t start = oracle.eval_count();
    BuildOutput         out{empty_state(oracle.size()), {}};
    for (std::size_t step = 0; step < k; ++step) {
        const BuildArms    arms(out.state, oracle);
        const SearchResult search = adaptive_search(arms, config, rng, Phase::build);
        const std::size_t  chosen = arms.candidate(search.winner);
        apply_add(out.state, oracle, chosen);
        out.trajectory.push_back(
            TrajectoryEvent{EventKind::build_add, chosen, 0, out.state.loss, oracle.eval_count() - start});
    }
    return out;
}

std::optional<SwapMove> banditpam_swap_once(const ClusterState&  state,
                                            const DistanceOracle& oracle,
                                            const SearchConfig&   config,
                                            SearchRng&            rng) {
    if (state.medoids.empty() || state.medoids.size() >= oracle.size()) {
        throw ArgumentError("swap needs 1 <= k < n");
    }
    const SwapArms     arms(state, oracle);
    const SearchResult search = adaptive_search(arms, config, rng, Phase::swap);
    const std::size_t  winner[] = {search.winner};

    double delta = 0.0;
    if (config.verify_swaps || (!search.winner_exact_sum && search.arms[search.winner].n_sampled == 0)) {
        delta = exact_sums(arms, winner, Phase::exact_fallback).front();
    } else if (search.winner_exact_sum) {
        delta = *search.winner_exact_sum;
    } else {
        delta = search.arms[search.winner].mean_est * static_cast<double>(oracle.size());
    }
    if (!(delta < 0.0)) {
        return std::nullopt;
    }
    const PairArm pair = arms.pair(search.winner);
    return SwapMove{pair.medoid, pair.candidate, delta};
}

FitResult fit(const DistanceOracle& oracle, std::size_t k, const SearchConfig& config, std::size_t max_swaps) {
    config.validate();
    const PhaseCounts   before = oracle.phase_counts();
    const std::uint64_t start  = oracle.eval_count();
    SearchRng           rng(config.seed);

    FitResult result;
    result.algorithm     = "banditpam";
    result.k             = k;
    result.metric        = oracle.metric();
    result.search_config = config;

    auto [state, trajectory] = banditpam_build(oracle, k, config, rng);
    result.trajectory        = std::move(trajectory);
    while (result.swap_count < max_swaps && k < oracle.size()) {
        const auto move = banditpam_swap_once(state, oracle, config, rng);
        if (!move) {
            break;
        }
        apply_swap(state, oracle, move->medoid_out, move->point_in);
        result.trajectory.push_back(TrajectoryEvent{EventKind::swap, move->medoid_out, move->point_in, state.loss,
                                                    oracle.eval_count() - start});
        ++result.swap_count;
    }
    assign_from_state(result, state);
    result.distance_evals = oracle.phase_counts() - before;
    return result;
}

}  // namespace medoids
