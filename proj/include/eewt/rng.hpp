#pragma once

#include <cstdint>
#include <random>

namespace eewt {

// Deterministic random source. mt19937_64 is specified bit-exactly by the
// standard, so a fixed seed reproduces identical draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform value in [0, bound). Masks down to the next power of two and
    // rejects out-of-range draws; power-of-two bounds never reject.
    std::uint32_t below(std::uint32_t bound) {
        if (bound <= 1) return 0;
        std::uint32_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        for (;;) {
            std::uint32_t v = static_cast<std::uint32_t>(gen_()) & mask;
            if (v < bound) return v;
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace eewt
