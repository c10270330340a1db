#pragma once

#include "gie/core.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace gie {

/// mt19937_64 with a fixed double conversion, so streams are identical on
/// every platform (std::uniform_real_distribution is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform();  // [0, 1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::mt19937_64 eng_;
};

/// One rejection-sampling attempt for class 1..7 (class numbering of
/// class_number()); empty when the draw is rejected. Accepted states are
/// physical, entangled, mixed, of the requested class and satisfy the
/// homodyne condition (class 2: nu <= 2 + 1/a instead).
std::optional<StdState> try_sample_class(int cls, Rng& rng);
/// Retries up to max_tries times, then throws NumericFailure.
StdState sample_class(int cls, Rng& rng, int max_tries = 100000);

/// Any physical standard-form state with kx >= kp > 0, mixing generic,
/// symmetric and GLEMS draws.
StdState sample_physical(Rng& rng);

}  // namespace gie
