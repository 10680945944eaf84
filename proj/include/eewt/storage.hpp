#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eewt/analysis.hpp"
#include "eewt/wiretap.hpp"

namespace eewt {

// Fixed-width binary share header. Byte-exact layout, all integers
// big-endian: magic "EEWT", version 0x01, m (1), modulus coefficient bits
// (4), n (2), k (2), k* (2), nu (2), mu (2), node_index (2),
// block_count (4).
struct ShareHeader {
    int m = 0;
    std::uint32_t modulus_bits = 0;
    int n = 0;
    int k = 0;
    int kstar = 0;
    int nu = 0;
    int mu = 0;
    int node_index = 0;
    std::uint32_t block_count = 0;

    bool same_scheme(const ShareHeader& other) const {
        return m == other.m && modulus_bits == other.modulus_bits && n == other.n &&
               k == other.k && kstar == other.kstar && nu == other.nu && mu == other.mu &&
               block_count == other.block_count;
    }
};

constexpr size_t kShareHeaderSize = 26;

// One storage node's view of a split secret: coordinate node_index of every
// block's codeword.
struct ShareFile {
    ShareHeader header;
    std::vector<Symbol> payload;  // block_count symbols

    std::vector<std::uint8_t> to_bytes() const;
    static ShareFile from_bytes(std::span<const std::uint8_t> bytes);
};

// Splits an arbitrary byte string into n share files. The byte stream is
// prefixed with its 8-byte big-endian length, converted to m-bit symbols
// (MSB first), zero-padded to whole k-symbol blocks, and each block encoded
// with a fresh randomizer from one seeded stream. Requires characteristic 2
// and m <= 16.
std::vector<ShareFile> split(const NestedScheme& scheme, std::span<const std::uint8_t> message,
                             std::uint64_t seed);

// Rebuilds the message from any >= nu distinct nodes. The scheme must match
// the share headers; headers must agree with each other.
std::vector<std::uint8_t> reconstruct(const NestedScheme& scheme,
                                      const std::vector<ShareFile>& files);

struct AdversaryReport {
    IndexSet nodes;
    std::uint32_t block_count = 0;
    int k = 0;
    EquivocationValue per_block;
    bool full_secrecy = false;   // per-block equivocation equals k
    bool over_mu = false;        // more nodes than the scheme's mu

    std::string to_text() const;
};

// What an adversary holding these share files learns: the per-block
// equivocation of the secret given the revealed coordinates.
AdversaryReport adversary_view(const NestedScheme& scheme, const std::vector<ShareFile>& files);

std::string share_file_name(const std::string& basename, int node_index);

}  // namespace eewt
