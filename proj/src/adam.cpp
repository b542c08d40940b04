#include "cbrl/adam.hpp"

#include <cmath>
#include <stdexcept>

#include "cbrl/error.hpp"

namespace cbrl {

AdamState::AdamState(AdamConfig cfg, std::size_t param_count)
    : cfg_(cfg), m_(param_count, 0.0), v_(param_count, 0.0) {}

void AdamState::step(const std::vector<std::span<double>>& params,
                     const std::vector<std::span<const double>>& grads) {
    if (params.size() != grads.size())
        throw std::invalid_argument("AdamState::step: params/grads count mismatch");
    std::size_t total = 0;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i].size() != grads[i].size())
            throw std::invalid_argument("AdamState::step: shape mismatch");
        total += params[i].size();
    }
    if (total != m_.size())
        throw std::invalid_argument("AdamState::step: parameter count mismatch");

    for (const auto& g : grads)
        for (double x : g)
            if (!std::isfinite(x)) throw NumericError("adam: non-finite gradient");

    ++t_;
    double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
    double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));

    std::size_t off = 0;
    for (std::size_t i = 0; i < params.size(); ++i) {
        auto p = params[i];
        auto g = grads[i];
        for (std::size_t k = 0; k < p.size(); ++k) {
            double& m = m_[off + k];
            double& v = v_[off + k];
            m = cfg_.beta1 * m + (1.0 - cfg_.beta1) * g[k];
            v = cfg_.beta2 * v + (1.0 - cfg_.beta2) * g[k] * g[k];
            p[k] -= cfg_.learning_rate * (m / bc1) / (std::sqrt(v / bc2) + cfg_.epsilon);
        }
        off += p.size();
    }
}

void AdamState::step(std::span<double> params, std::span<const double> grads) {
    step(std::vector<std::span<double>>{params},
         std::vector<std::span<const double>>{grads});
}

} // namespace cbrl
