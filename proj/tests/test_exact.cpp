#include "doctest.h"

#include "medoids/deltas.hpp"
#include "medoids/errors.hpp"
#include "medoids/exact.hpp"
#include "test_util.hpp"

#include <random>

using namespace medoids;
using medoids::test::brute_loss;
using medoids::test::line;

namespace {

// Smallest loss reachable by adding one point to `prefix`, by direct summation.
double best_extension_loss(const Dataset& data, Metric metric, std::vector<std::size_t> prefix) {
    double best = std::numeric_limits<double>::infinity();
    prefix.push_back(0);
    for (std::size_t x = 0; x < data.size(); ++x) {
        if (std::find(prefix.begin(), prefix.end() - 1, x) != prefix.end() - 1) continue;
        prefix.back() = x;
        best          = std::min(best, brute_loss(data, metric, prefix));
    }
    return best;
}

}  // namespace

TEST_CASE("pam_build on the five-point line") {
    const auto     data = line({0, 1, 2, 3, 10});
    DistanceOracle oracle(data, Metric::l1);
    auto one = pam_build(oracle, 1);
    CHECK(one.state.medoids == std::vector<std::size_t>{2});
    CHECK(one.state.loss == 12.0);
    auto two = pam_build(oracle, 2);
    CHECK(two.state.medoids == std::vector<std::size_t>{2, 4});
    CHECK(two.state.loss == 4.0);
    REQUIRE(two.trajectory.size() == 2);
    CHECK(two.trajectory[0].loss_after == 12.0);
    CHECK(two.trajectory[1].loss_after == 4.0);
    auto all = pam_build(oracle, 5);
    CHECK(all.state.loss == 0.0);
    CHECK_THROWS_AS(pam_build(oracle, 6), ArgumentError);
    CHECK_THROWS_AS(pam_build(oracle, 0), ArgumentError);
}

TEST_CASE("every pam_build step attains the exhaustive greedy minimum") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto     data = medoids::test::random_points(8 + seed % 20, 2, seed + 100);
        DistanceOracle oracle(data, Metric::l2);
        const std::size_t k = 1 + seed % 4;
        const auto built = pam_build(oracle, k).state.medoids;
        for (std::size_t l = 0; l < k; ++l) {
            const std::vector<std::size_t> prefix(built.begin(), built.begin() + l);
            const std::vector<std::size_t> step(built.begin(), built.begin() + l + 1);
            CHECK(brute_loss(data, Metric::l2, step) ==
                  doctest::Approx(best_extension_loss(data, Metric::l2, prefix)).epsilon(1e-12));
        }
    }
}

TEST_CASE("naive swap scan") {
    const auto     data = line({0, 1, 2, 3, 10});
    DistanceOracle oracle(data, Metric::l1);
    const auto     state = init_state(oracle, std::vector<std::size_t>{0, 4});
    const auto     before = state;
    const auto     move  = pam_swap_once_naive(state, oracle);
    REQUIRE(move);
    // (0 -> 1) and (0 -> 2) both reach loss 4; the lower candidate index wins
    CHECK(move->medoid_out == 0);
    CHECK(move->point_in == 1);
    CHECK(move->delta == -2.0);
    CHECK(state == before);

    const auto optimal = init_state(oracle, std::vector<std::size_t>{2, 4});
    CHECK_FALSE(pam_swap_once_naive(optimal, oracle));
    CHECK_FALSE(pam_swap_once_fastpam1(optimal, oracle));

    SUBCASE("one non-medoid") {
        const auto s = init_state(oracle, std::vector<std::size_t>{0, 1, 2, 4});
        oracle.reset();
        pam_swap_once_naive(s, oracle);
        CHECK(oracle.phase_counts()[Phase::swap] == 4 * 5);
    }
}

TEST_CASE("fastpam1 delta terms") {
    const auto     data = line({0, 1, 2, 3, 10});
    DistanceOracle oracle(data, Metric::l1);
    const auto     state = init_state(oracle, std::vector<std::size_t>{0, 4});
    // j = 3 belongs to medoid 4: swapping 0 for 2 moves it from d1 = 3... d1[3] is 3 - 0? no: d(10,3) = 7 vs d(0,3) = 3
    CHECK(state.nearest[3] == 0);
    // j in C_m and d(x, x_j) >= d2: pays d2 - d1
    CHECK(swap_delta(state, 0, 3, 100.0) == state.d2[3] - state.d1[3]);
    // j outside C_m and d(x, x_j) >= d1: unaffected
    CHECK(swap_delta(state, 4, 3, 100.0) == 0.0);
    // j = x with x outside C_m
    CHECK(swap_delta(state, 4, 2, 0.0) == -state.d1[2]);
}

TEST_CASE("fastpam1 matches naive, and deltas equal the exact loss change") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::mt19937_64   rng(seed);
        const std::size_t n      = 10 + rng() % 31;
        const std::size_t k      = 1 + rng() % 4;
        const Metric      metric = static_cast<Metric>(seed % 3);
        const auto        data   = medoids::test::random_points(n, 2, seed + 1000);
        DistanceOracle    oracle(data, metric);

        std::vector<std::size_t> medoids;
        while (medoids.size() < k) {
            const std::size_t m = rng() % n;
            if (std::find(medoids.begin(), medoids.end(), m) == medoids.end()) medoids.push_back(m);
        }
        const auto state = init_state(oracle, medoids);

        oracle.reset();
        const auto naive = pam_swap_once_naive(state, oracle);
        CHECK(oracle.phase_counts()[Phase::swap] == k * (n - k) * n);
        oracle.reset();
        const auto fast = pam_swap_once_fastpam1(state, oracle);
        CHECK(oracle.phase_counts()[Phase::swap] == (n - k) * n);

        REQUIRE(naive.has_value() == fast.has_value());
        if (naive) {
            CHECK(naive->medoid_out == fast->medoid_out);
            CHECK(naive->point_in == fast->point_in);
            auto after = state;
            apply_swap(after, oracle, fast->medoid_out, fast->point_in);
            CHECK(fast->delta == doctest::Approx(after.loss - state.loss).epsilon(1e-9));
            CHECK(after.loss < state.loss);
        }
    }
}

TEST_CASE("summed swap terms equal the loss change for every pair") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto     data = medoids::test::random_points(15, 2, seed + 5);
        DistanceOracle oracle(data, Metric::l1);
        const auto     state = init_state(oracle, std::vector<std::size_t>{1, 6, 11});
        for (auto m : state.medoids) {
            for (std::size_t x = 0; x < 15; ++x) {
                if (state.is_medoid(x)) continue;
                double sum = 0.0;
                for (std::size_t j = 0; j < 15; ++j) sum += swap_delta(state, m, j, oracle.distance(x, j, Phase::swap));
                auto after = state;
                apply_swap(after, oracle, m, x);
                CHECK(sum == doctest::Approx(after.loss - state.loss).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("run_pam") {
    const auto     data = line({0, 1, 2, 3, 10});
    DistanceOracle oracle(data, Metric::l1);
    for (auto variant : {PamVariant::naive, PamVariant::fastpam1}) {
        const auto result = run_pam(oracle, 2, variant, 100);
        CHECK(result.medoids == std::vector<std::size_t>{2, 4});
        CHECK(result.swap_count == 0);
        CHECK(result.loss == 4.0);
        CHECK(result.assignments == std::vector<std::size_t>{2, 2, 2, 2, 4});
    }
    const auto single = line({7});
    DistanceOracle one(single, Metric::l1);
    const auto     trivial = run_pam(one, 1, PamVariant::naive);
    CHECK(trivial.medoids == std::vector<std::size_t>{0});
    CHECK(trivial.loss == 0.0);
}

TEST_CASE("run_pam variants agree and respect the swap cap") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto     data = medoids::test::random_points(30, 2, seed + 77);
        DistanceOracle oracle(data, Metric::l2);
        const auto     naive = run_pam(oracle, 3, PamVariant::naive);
        const auto     fast  = run_pam(oracle, 3, PamVariant::fastpam1);
        CHECK(naive.medoids == fast.medoids);
        CHECK(naive.loss == fast.loss);
        REQUIRE(naive.trajectory.size() == fast.trajectory.size());
        for (std::size_t i = 0; i < naive.trajectory.size(); ++i) {
            CHECK(naive.trajectory[i].same_step(fast.trajectory[i]));
            if (i > 0) CHECK(naive.trajectory[i].loss_after <= naive.trajectory[i - 1].loss_after);
        }
        const auto capped = run_pam(oracle, 3, PamVariant::fastpam1, 0);
        CHECK(capped.swap_count == 0);
        CHECK(capped.trajectory.size() == 3);
        CHECK(capped.medoids == pam_build(oracle, 3).state.medoids);
    }
}

TEST_CASE("build evaluation counts") {
    const std::size_t n = 25, k = 4;
    const auto        data = medoids::test::random_points(n, 2, 3);
    DistanceOracle    oracle(data, Metric::l2);
    pam_build(oracle, k);
    std::uint64_t expected = 0;
    for (std::size_t l = 0; l < k; ++l) expected += (n - l) * n;
    CHECK(oracle.phase_counts()[Phase::build] == expected);
    CHECK(oracle.phase_counts()[Phase::cache] == k * n);
}

TEST_CASE("voronoi iteration") {
    const auto     data = line({0, 1, 2, 3, 10});
    DistanceOracle oracle(data, Metric::l1);

    SUBCASE("fixed point") {
        const std::vector<std::size_t> init = {2, 4};
        const auto result = voronoi_iteration(oracle, init, 10);
        CHECK(result.medoids == init);
        CHECK(result.swap_count == 0);
    }
    SUBCASE("poor start") {
        // {0,1} -> {0,2} -> {0,3}, then stable; worked by hand
        const std::vector<std::size_t> init = {0, 1};
        const auto result = voronoi_iteration(oracle, init, 10);
        CHECK(result.medoids == std::vector<std::size_t>{0, 3});
        CHECK(result.loss == 9.0);
        CHECK(result.swap_count == 2);
        CHECK(result.loss >= run_pam(oracle, 2, PamVariant::naive).loss);
        for (std::size_t i = 1; i < result.trajectory.size(); ++i) {
            CHECK(result.trajectory[i].loss_after <= result.trajectory[i - 1].loss_after);
        }
    }
    SUBCASE("k = 1 reaches the 1-medoid") {
        const std::vector<std::size_t> init = {4};
        const auto result = voronoi_iteration(oracle, init, 10);
        CHECK(result.medoids == std::vector<std::size_t>{2});
        CHECK(result.swap_count == 1);
    }
    SUBCASE("iteration cap") {
        const std::vector<std::size_t> init = {0, 1};
        CHECK(voronoi_iteration(oracle, init, 1).medoids == std::vector<std::size_t>{0, 2});
    }
}
