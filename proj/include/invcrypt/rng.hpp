#pragma once

#include <cstdint>
#include <random>

namespace invcrypt {

/// Deterministic random source. Every randomized operation takes one of
/// these explicitly; replaying a seed replays the whole stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform value in [0, bound), bound > 0. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    bool bit() { return next() & 1u; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace invcrypt
