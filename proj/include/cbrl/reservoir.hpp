#pragma once

#include "cbrl/matrix.hpp"
#include "cbrl/rng.hpp"

namespace cbrl {

struct ReservoirConfig {
    int units = 256;
    int inputs = 5;
    double connectivity = 0.1;             // probability of a recurrent connection
    double gain = 2.2;                     // effective spectral radius of the recurrence
    double input_weight_halfwidth = 0.5;   // entries of the input matrix are U[-w, w]
};

/// Fixed random weights. The recurrent matrix is normalized so its spectral
/// radius is 1; the gain rescales it at step time.
struct ReservoirParams {
    SparseMatrix recurrent;
    DenseMatrix input;
};

using ReservoirState = Vector;

/// Recurrent entries drawn uniform in [-1, 1], kept with the configured
/// probability, then divided by the draw's spectral radius. A degenerate draw
/// (zero or nilpotent) is retried once before failing.
ReservoirParams init_reservoir(const ReservoirConfig& cfg, RngStream& rng);

/// Zero state used at every episode start.
ReservoirState reset_state(const ReservoirConfig& cfg);

/// x = tanh(gain * W_rec * x_prev + W_in * u)
void reservoir_step(const ReservoirParams& params, const ReservoirConfig& cfg,
                    const ReservoirState& prev, const Vector& input, ReservoirState& out);
ReservoirState reservoir_step(const ReservoirParams& params, const ReservoirConfig& cfg,
                              const ReservoirState& prev, const Vector& input);

} // namespace cbrl
