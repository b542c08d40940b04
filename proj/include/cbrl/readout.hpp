#pragma once

#include "cbrl/matrix.hpp"
#include "cbrl/rng.hpp"

namespace cbrl {

/// Linear readout with tanh output: action = tanh(W [state; input]).
/// W has shape out_dim x (state_dim + input_dim).
struct ReadoutParams {
    DenseMatrix weight;
    int state_dim = 0;
    int input_dim = 0;

    int output_dim() const { return weight.rows(); }
};

ReadoutParams make_readout(int out_dim, int state_dim, int input_dim, RngStream& rng);

Vector readout_forward(const ReadoutParams& p, const Vector& state, const Vector& input);

struct ReadoutCache {
    Vector concat;
    Vector out;
};

const Vector& readout_forward(const ReadoutParams& p, const Vector& state, const Vector& input,
                              ReadoutCache& cache);

/// Accumulates the gradient of a scalar loss w.r.t. the readout weights given
/// the gradient w.r.t. the (post-tanh) output.
void readout_backward(const ReadoutParams& p, const ReadoutCache& cache,
                      const Vector& output_grad, DenseMatrix& grad_acc);

} // namespace cbrl
