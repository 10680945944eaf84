#include "eewt/channel.hpp"

#include <algorithm>

namespace eewt {

ErasureChannel::ErasureChannel(const ErasureChannelSpec& spec) : spec_(spec), rng_(spec.seed) {
    if (spec.n < 0 || spec.revealed_count < 0 || spec.revealed_count > spec.n)
        throw InvalidParams("revealed count must lie in [0, n]");
}

IndexSet ErasureChannel::sample_revealed_set() {
    const int n = spec_.n;
    const int r = spec_.revealed_count;
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = 0; i < r; ++i)
        std::swap(perm[static_cast<size_t>(i)],
                  perm[static_cast<size_t>(i) + rng_.below(static_cast<std::uint32_t>(n - i))]);
    return IndexSet(std::vector<int>(perm.begin(), perm.begin() + r));
}

Observation ErasureChannel::transmit(std::span<const Symbol> codeword) {
    if (static_cast<int>(codeword.size()) != spec_.n)
        throw LengthMismatch("codeword length does not match channel n");
    IndexSet j = sample_revealed_set();
    std::vector<Symbol> revealed;
    revealed.reserve(static_cast<size_t>(j.size()));
    for (int i : j) revealed.push_back(codeword[static_cast<size_t>(i)]);
    return Observation(std::move(j), std::move(revealed));
}

}  // namespace eewt
