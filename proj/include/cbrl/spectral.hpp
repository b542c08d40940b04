#pragma once

#include "cbrl/matrix.hpp"

namespace cbrl {

/// Magnitude of the largest-magnitude eigenvalue, relative accuracy 1e-6 or
/// better. Power iteration with a two-term recurrence fit for complex
/// dominant pairs; a dense eigensolver takes over if the iteration does not
/// settle. Throws std::invalid_argument on non-square input.
double estimate_spectral_radius(const DenseMatrix& m);
double estimate_spectral_radius(const SparseMatrix& m);

} // namespace cbrl
