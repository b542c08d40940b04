#include "cbrl/readout.hpp"

#include <cmath>
#include <stdexcept>

namespace cbrl {

ReadoutParams make_readout(int out_dim, int state_dim, int input_dim, RngStream& rng) {
    ReadoutParams p;
    p.state_dim = state_dim;
    p.input_dim = input_dim;
    p.weight = DenseMatrix(out_dim, state_dim + input_dim);
    double bound = 1.0 / std::sqrt(static_cast<double>(state_dim + input_dim));
    for (double& w : p.weight.data()) w = rng.uniform(-bound, bound);
    return p;
}

const Vector& readout_forward(const ReadoutParams& p, const Vector& state, const Vector& input,
                              ReadoutCache& cache) {
    if (static_cast<int>(state.size()) != p.state_dim ||
        static_cast<int>(input.size()) != p.input_dim)
        throw std::invalid_argument("readout_forward: dimension mismatch");
    cache.concat.resize(state.size() + input.size());
    std::copy(state.begin(), state.end(), cache.concat.begin());
    std::copy(input.begin(), input.end(), cache.concat.begin() + state.size());
    cache.out.resize(p.weight.rows());
    matvec(p.weight, cache.concat, cache.out);
    for (double& z : cache.out) z = std::tanh(z);
    return cache.out;
}

Vector readout_forward(const ReadoutParams& p, const Vector& state, const Vector& input) {
    ReadoutCache cache;
    return readout_forward(p, state, input, cache);
}

void readout_backward(const ReadoutParams& p, const ReadoutCache& cache,
                      const Vector& output_grad, DenseMatrix& grad_acc) {
    if (static_cast<int>(output_grad.size()) != p.weight.rows() ||
        grad_acc.rows() != p.weight.rows() || grad_acc.cols() != p.weight.cols())
        throw std::invalid_argument("readout_backward: dimension mismatch");
    for (int r = 0; r < p.weight.rows(); ++r) {
        double d = output_grad[r] * (1.0 - cache.out[r] * cache.out[r]);
        double* grow = grad_acc.row(r);
        for (int c = 0; c < p.weight.cols(); ++c) grow[c] += d * cache.concat[c];
    }
}

} // namespace cbrl
