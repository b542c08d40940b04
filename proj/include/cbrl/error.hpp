#pragma once

#include <stdexcept>

namespace cbrl {

/// Non-finite values or failed numeric procedures; aborts the affected run.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cbrl
