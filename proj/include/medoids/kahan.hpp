#pragma once

namespace medoids {

// Compensated summation. Every exact objective in the library goes through
// this accumulator in reference order so that different solvers computing the
// same sum get bit-identical results.
class KahanSum {
  public:
    void add(double value) noexcept {
        const double y = value - compensation_;
        const double t = sum_ + y;
        compensation_  = (t - sum_) - y;
        sum_           = t;
    }

    double value() const noexcept { return sum_; }

  private:
    double sum_          = 0.0;
    double compensation_ = 0.0;
};

}  // namespace medoids
