#include "cbrl/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace cbrl {

std::size_t MlpParams::param_count() const {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.weight.data().size() + l.bias.size();
    return n;
}

MlpParams make_mlp(const std::vector<int>& dims, const std::vector<Activation>& acts,
                   RngStream& rng) {
    if (dims.size() < 2 || acts.size() != dims.size() - 1)
        throw std::invalid_argument("make_mlp: dims/acts mismatch");
    MlpParams p;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
        MlpLayer layer;
        layer.weight = DenseMatrix(dims[i + 1], dims[i]);
        layer.bias.assign(dims[i + 1], 0.0);
        layer.act = acts[i];
        double bound = 1.0 / std::sqrt(static_cast<double>(dims[i]));
        for (double& w : layer.weight.data()) w = rng.uniform(-bound, bound);
        for (double& b : layer.bias) b = rng.uniform(-bound, bound);
        p.layers.push_back(std::move(layer));
    }
    return p;
}

namespace {

void apply_activation(Activation act, const Vector& pre, Vector& post) {
    post.resize(pre.size());
    switch (act) {
    case Activation::Linear:
        post = pre;
        break;
    case Activation::ReLU:
        for (std::size_t i = 0; i < pre.size(); ++i) post[i] = pre[i] > 0.0 ? pre[i] : 0.0;
        break;
    case Activation::Tanh:
        for (std::size_t i = 0; i < pre.size(); ++i) post[i] = std::tanh(pre[i]);
        break;
    }
}

} // namespace

const Vector& mlp_forward(const MlpParams& p, const Vector& input, MlpCache& cache) {
    if (p.layers.empty()) throw std::invalid_argument("mlp_forward: empty network");
    if (static_cast<int>(input.size()) != p.input_dim())
        throw std::invalid_argument("mlp_forward: input dimension mismatch");

    cache.input = input;
    cache.pre.resize(p.layers.size());
    cache.post.resize(p.layers.size());

    const Vector* cur = &cache.input;
    for (std::size_t i = 0; i < p.layers.size(); ++i) {
        const MlpLayer& l = p.layers[i];
        Vector& pre = cache.pre[i];
        pre.resize(l.weight.rows());
        matvec(l.weight, *cur, pre);
        for (int r = 0; r < l.weight.rows(); ++r) pre[r] += l.bias[r];
        apply_activation(l.act, pre, cache.post[i]);
        cur = &cache.post[i];
    }
    return cache.post.back();
}

Vector mlp_forward(const MlpParams& p, const Vector& input) {
    MlpCache cache;
    return mlp_forward(p, input, cache);
}

MlpGrads MlpGrads::like(const MlpParams& p) {
    MlpGrads g;
    for (const auto& l : p.layers) {
        g.weight.emplace_back(l.weight.rows(), l.weight.cols());
        g.bias.emplace_back(l.bias.size(), 0.0);
    }
    return g;
}

void MlpGrads::zero() {
    for (auto& w : weight)
        for (double& v : w.data()) v = 0.0;
    for (auto& b : bias)
        for (double& v : b) v = 0.0;
}

Vector mlp_backward(const MlpParams& p, const MlpCache& cache, const Vector& output_grad,
                    MlpGrads& acc) {
    if (cache.post.size() != p.layers.size())
        throw std::invalid_argument("mlp_backward: cache does not match network");
    if (output_grad.size() != cache.post.back().size())
        throw std::invalid_argument("mlp_backward: output gradient shape mismatch");

    Vector delta = output_grad;
    for (int i = static_cast<int>(p.layers.size()) - 1; i >= 0; --i) {
        const MlpLayer& l = p.layers[i];
        const Vector& pre = cache.pre[i];
        const Vector& post = cache.post[i];
        switch (l.act) {
        case Activation::Linear:
            break;
        case Activation::ReLU:
            for (std::size_t r = 0; r < delta.size(); ++r)
                if (pre[r] <= 0.0) delta[r] = 0.0;
            break;
        case Activation::Tanh:
            for (std::size_t r = 0; r < delta.size(); ++r)
                delta[r] *= 1.0 - post[r] * post[r];
            break;
        }
        const Vector& below = (i == 0) ? cache.input : cache.post[i - 1];
        DenseMatrix& gw = acc.weight[i];
        Vector& gb = acc.bias[i];
        for (int r = 0; r < l.weight.rows(); ++r) {
            double d = delta[r];
            double* grow = gw.row(r);
            for (int c = 0; c < l.weight.cols(); ++c) grow[c] += d * below[c];
            gb[r] += d;
        }
        Vector next(l.weight.cols());
        matvec_transpose(l.weight, delta, next);
        delta = std::move(next);
    }
    return delta;
}

std::vector<std::span<double>> param_views(MlpParams& p) {
    std::vector<std::span<double>> v;
    for (auto& l : p.layers) {
        v.push_back(l.weight.data());
        v.push_back(std::span<double>(l.bias));
    }
    return v;
}

std::vector<std::span<const double>> grad_views(const MlpGrads& g) {
    std::vector<std::span<const double>> v;
    for (std::size_t i = 0; i < g.weight.size(); ++i) {
        v.push_back(g.weight[i].data());
        v.push_back(std::span<const double>(g.bias[i]));
    }
    return v;
}

} // namespace cbrl
