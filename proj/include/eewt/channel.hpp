#pragma once

#include <cstdint>
#include <span>

#include "eewt/wiretap.hpp"

namespace eewt {

struct ErasureChannelSpec {
    int n = 0;
    int revealed_count = 0;
    std::uint64_t seed = 0;
};

// Fixed-count erasure channel: every transmission reveals exactly
// revealed_count symbols at uniformly random positions. Owns its generator
// state, so successive draws differ while a fixed seed reproduces the whole
// sequence. Not safe for concurrent use; use one instance per channel.
class ErasureChannel {
public:
    explicit ErasureChannel(const ErasureChannelSpec& spec);

    const ErasureChannelSpec& spec() const { return spec_; }

    // Uniform size-revealed_count subset of [0, n) by partial Fisher-Yates.
    IndexSet sample_revealed_set();

    Observation transmit(std::span<const Symbol> codeword);

private:
    ErasureChannelSpec spec_;
    Rng rng_;
};

}  // namespace eewt
