#pragma once

#include <cstdint>
#include <string_view>

namespace cbrl {

/// Deterministic splittable random stream. Derived sub-streams depend only on
/// the parent's seed and the label, never on how much the parent has been
/// consumed, so per-purpose streams are independent of iteration order.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    /// Child stream for a (parent seed, label) pair.
    RngStream derive(std::string_view label) const;

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double uniform01();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal (Box-Muller, second draw cached).
    double normal();

    /// Uniform integer in [0, n), n > 0.
    std::uint64_t uniform_index(std::uint64_t n);

private:
    std::uint64_t seed_;
    std::uint64_t state_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

} // namespace cbrl
