#pragma once

#include "medoids/bandit.hpp"

#include <random>
#include <vector>

namespace medoids::test {

// Arm objectives read from a fixed table; counts g-calls per arm.
class TableEvaluator final : public ArmEvaluator {
  public:
    explicit TableEvaluator(std::vector<std::vector<double>> table)
      : table_(std::move(table))
      , calls_(table_.size(), 0) {}

    std::size_t target_count() const override { return table_.size(); }
    std::size_t reference_count() const override { return table_.front().size(); }

    void evaluate(std::span<const std::size_t> arms, std::span<const std::size_t> refs, Phase,
                  std::span<double> out) const override {
        for (std::size_t a = 0; a < arms.size(); ++a) {
            calls_[arms[a]] += refs.size();
            for (std::size_t r = 0; r < refs.size(); ++r) out[a * refs.size() + r] = table_[arms[a]][refs[r]];
        }
    }

    double true_mean(std::size_t arm) const {
        double sum = 0.0;
        for (double v : table_[arm]) sum += v;
        return sum / static_cast<double>(table_[arm].size());
    }

    std::size_t calls(std::size_t arm) const { return calls_[arm]; }

  private:
    std::vector<std::vector<double>> table_;
    mutable std::vector<std::size_t> calls_;
};

// Rows of Gaussian noise with standard deviation `sigma`, shifted so that row
// a has empirical mean exactly means[a].
inline std::vector<std::vector<double>> gaussian_table(const std::vector<double>& means, std::size_t refs, double sigma,
                                                       std::uint64_t seed) {
    std::mt19937_64                  rng(seed);
    std::normal_distribution<double> noise(0.0, sigma);
    std::vector<std::vector<double>> table;
    for (double mean : means) {
        std::vector<double> row(refs);
        double              sum = 0.0;
        for (auto& v : row) {
            v = noise(rng);
            sum += v;
        }
        const double shift = mean - sum / static_cast<double>(refs);
        for (auto& v : row) v += shift;
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace medoids::test
