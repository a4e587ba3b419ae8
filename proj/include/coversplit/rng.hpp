#pragma once

// Seeded deterministic randomness. mt19937_64 has a standard-specified
// sequence; the bounded draws below avoid std::uniform_int_distribution,
// whose output is implementation-defined. Identical seeds must reproduce
// identical runs on any platform.

#include <cstdint>
#include <random>

namespace coversplit {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, n), rejection-sampled to kill modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do {
            r = gen_();
        } while (r >= limit);
        return r % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    bool coin() { return (gen_() & 1u) != 0; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace coversplit
