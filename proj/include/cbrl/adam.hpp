#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cbrl {

struct AdamConfig {
    double learning_rate = 5e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/// Adam with bias correction over a fixed-size parameter set. The parameter
/// set may be split over several arrays; the views must be passed in the same
/// order on every step.
class AdamState {
public:
    AdamState() = default;
    AdamState(AdamConfig cfg, std::size_t param_count);

    /// Rejects the update (parameters untouched) and throws NumericError if
    /// any gradient entry is non-finite.
    void step(const std::vector<std::span<double>>& params,
              const std::vector<std::span<const double>>& grads);
    void step(std::span<double> params, std::span<const double> grads);

    long step_count() const { return t_; }
    const AdamConfig& config() const { return cfg_; }

private:
    AdamConfig cfg_;
    long t_ = 0;
    std::vector<double> m_, v_;
};

} // namespace cbrl
