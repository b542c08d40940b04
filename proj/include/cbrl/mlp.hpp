#pragma once

#include <vector>

#include "cbrl/matrix.hpp"
#include "cbrl/rng.hpp"

namespace cbrl {

enum class Activation { Linear, ReLU, Tanh };

struct MlpLayer {
    DenseMatrix weight;
    Vector bias;
    Activation act = Activation::Linear;
};

struct MlpParams {
    std::vector<MlpLayer> layers;

    int input_dim() const { return layers.empty() ? 0 : layers.front().weight.cols(); }
    int output_dim() const { return layers.empty() ? 0 : layers.back().weight.rows(); }
    std::size_t param_count() const;
};

/// Fully connected net with the given layer widths and per-layer activations
/// (acts.size() == dims.size() - 1). Weights and biases are uniform in
/// [-1/sqrt(fan_in), +1/sqrt(fan_in)].
MlpParams make_mlp(const std::vector<int>& dims, const std::vector<Activation>& acts,
                   RngStream& rng);

/// Reusable forward cache: pre-activations and activations per layer.
struct MlpCache {
    Vector input;
    std::vector<Vector> pre;
    std::vector<Vector> post;
};

/// Returns the output (reference into the cache).
const Vector& mlp_forward(const MlpParams& p, const Vector& input, MlpCache& cache);
Vector mlp_forward(const MlpParams& p, const Vector& input);

struct MlpGrads {
    std::vector<DenseMatrix> weight;
    std::vector<Vector> bias;

    static MlpGrads like(const MlpParams& p);
    void zero();
};

/// Backpropagates a loss gradient w.r.t. the output; accumulates parameter
/// gradients into `acc` and returns the gradient w.r.t. the input.
Vector mlp_backward(const MlpParams& p, const MlpCache& cache, const Vector& output_grad,
                    MlpGrads& acc);

std::vector<std::span<double>> param_views(MlpParams& p);
std::vector<std::span<const double>> grad_views(const MlpGrads& g);

} // namespace cbrl
