#include "medoids/exact.hpp"

#include "medoids/deltas.hpp"
#include "medoids/errors.hpp"
#include "medoids/kahan.hpp"

#include <string>

namespace medoids {

namespace {

void check_k(const DistanceOracle& oracle, std::size_t k) {
    if (k < 1 || k > oracle.size()) {
        throw ArgumentError("k must be in [1, n]; got k = " + std::to_string(k) + ", n = " +
                            std::to_string(oracle.size()));
    }
}

std::vector<std::size_t> non_medoids(const ClusterState& state, std::size_t n) {
    std::vector<bool> taken(n, false);
    for (const auto m : state.medoids) {
        taken[m] = true;
    }
    std::vector<std::size_t> out;
    out.reserve(n - state.medoids.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (!taken[i]) out.push_back(i);
    }
    return out;
}

TrajectoryEvent make_event(EventKind kind, std::size_t chosen, std::size_t swapped_in, const ClusterState& state,
                           const DistanceOracle& oracle, std::uint64_t start_count) {
    return TrajectoryEvent{kind, chosen, swapped_in, state.loss, oracle.eval_count() - start_count};
}

}  // namespace

BuildOutput pam_build(const DistanceOracle& oracle, std::size_t k) {
    check_k(oracle, k);
    const std::size_t   n     = oracle.size();
    const std::uint64_t start = oracle.eval_count();

    BuildOutput out{empty_state(n), {}};
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t best_candidate = n;
        double      best_value     = 0.0;
        for (const auto x : non_medoids(out.state, n)) {
            KahanSum sum;
            for (std::size_t j = 0; j < n; ++j) {
                sum.add(build_gain(out.state, j, oracle.distance(x, j, Phase::build)));
            }
            if (best_candidate == n || sum.value() < best_value) {
                best_candidate = x;
                best_value     = sum.value();
            }
        }
        apply_add(out.state, oracle, best_candidate);
        out.trajectory.push_back(make_event(EventKind::build_add, best_candidate, 0, out.state, oracle, start));
    }
    return out;
}

std::optional<SwapMove> pam_swap_once_naive(const ClusterState& state, const DistanceOracle& oracle) {
    const std::size_t n          = oracle.size();
    const auto        candidates = non_medoids(state, n);

    std::optional<SwapMove> best;
    double                  best_loss = 0.0;
    for (const auto m : state.medoids) {
        for (const auto x : candidates) {
            // loss of (M \ {m}) u {x}: the cached distance to the closest
            // remaining medoid, or the distance to x
            KahanSum loss;
            for (std::size_t j = 0; j < n; ++j) {
                const double remaining = state.nearest[j] == m ? state.d2[j] : state.d1[j];
                loss.add(std::min(remaining, oracle.distance(x, j, Phase::swap)));
            }
            if (!best || loss.value() < best_loss) {
                best      = SwapMove{m, x, loss.value() - state.loss};
                best_loss = loss.value();
            }
        }
    }
    if (best && best_loss < state.loss) {
        return best;
    }
    return std::nullopt;
}

std::optional<SwapMove> pam_swap_once_fastpam1(const ClusterState& state, const DistanceOracle& oracle) {
    const std::size_t n          = oracle.size();
    const std::size_t k          = state.medoids.size();
    const auto        candidates = non_medoids(state, n);

    // deltas[p * |candidates| + c]: loss change of swapping medoids[p] for candidates[c]
    std::vector<double>   deltas(k * candidates.size());
    std::vector<KahanSum> sums(k);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        std::fill(sums.begin(), sums.end(), KahanSum{});
        for (std::size_t j = 0; j < n; ++j) {
            const double dist = oracle.distance(candidates[c], j, Phase::swap);
            for (std::size_t p = 0; p < k; ++p) {
                sums[p].add(swap_delta(state, state.medoids[p], j, dist));
            }
        }
        for (std::size_t p = 0; p < k; ++p) {
            deltas[p * candidates.size() + c] = sums[p].value();
        }
    }

    std::optional<SwapMove> best;
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const double delta = deltas[p * candidates.size() + c];
            if (!best || delta < best->delta) {
                best = SwapMove{state.medoids[p], candidates[c], delta};
            }
        }
    }
    if (best && best->delta < 0.0) {
        return best;
    }
    return std::nullopt;
}

FitResult run_pam(const DistanceOracle& oracle, std::size_t k, PamVariant variant, std::size_t max_swaps) {
    const PhaseCounts   before = oracle.phase_counts();
    const std::uint64_t start  = oracle.eval_count();

    FitResult result;
    result.algorithm = variant == PamVariant::naive ? "pam" : "fastpam1";
    result.k         = k;
    result.metric    = oracle.metric();

    auto [state, trajectory] = pam_build(oracle, k);
    result.trajectory        = std::move(trajectory);
    while (result.swap_count < max_swaps && k < oracle.size()) {
        const auto move = variant == PamVariant::naive ? pam_swap_once_naive(state, oracle)
                                                       : pam_swap_once_fastpam1(state, oracle);
        if (!move) {
            break;
        }
        apply_swap(state, oracle, move->medoid_out, move->point_in);
        result.trajectory.push_back(make_event(EventKind::swap, move->medoid_out, move->point_in, state, oracle, start));
        ++result.swap_count;
    }
    assign_from_state(result, state);
    result.distance_evals = oracle.phase_counts() - before;
    return result;
}

FitResult voronoi_iteration(const DistanceOracle& oracle, std::span<const std::size_t> init, std::size_t max_iters) {
    const PhaseCounts   before = oracle.phase_counts();
    const std::uint64_t start  = oracle.eval_count();
    const std::size_t   n      = oracle.size();

    FitResult result;
    result.algorithm = "voronoi";
    result.k         = init.size();
    result.metric    = oracle.metric();

    ClusterState state = init_state(oracle, init);
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        std::vector<std::vector<std::size_t>> members(state.medoids.size());
        for (std::size_t j = 0; j < n; ++j) {
            members[state.position_of(state.nearest[j])].push_back(j);
        }
        std::vector<std::size_t> next = state.medoids;
        for (std::size_t p = 0; p < members.size(); ++p) {
            // the incumbent stays unless strictly beaten; an empty cluster keeps it
            auto cluster_cost = [&](std::size_t c) {
                KahanSum cost;
                for (const auto j : members[p]) {
                    cost.add(oracle.distance(c, j, Phase::swap));
                }
                return cost.value();
            };
            if (members[p].empty()) {
                continue;
            }
            double best_cost = cluster_cost(state.medoids[p]);
            for (const auto c : members[p]) {
                if (c == state.medoids[p]) continue;
                const double cost = cluster_cost(c);
                if (cost < best_cost) {
                    next[p]   = c;
                    best_cost = cost;
                }
            }
        }
        if (next == state.medoids) {
            break;
        }
        state = init_state(oracle, next);
        result.trajectory.push_back(make_event(EventKind::voronoi_update, 0, 0, state, oracle, start));
        ++result.swap_count;
    }
    assign_from_state(result, state);
    result.distance_evals = oracle.phase_counts() - before;
    return result;
}

}  // namespace medoids
