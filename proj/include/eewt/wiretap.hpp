#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eewt/codes.hpp"
#include "eewt/rng.hpp"

namespace eewt {

// Revealed index set together with the revealed symbol values.
struct Observation {
    IndexSet revealed;
    std::vector<Symbol> symbols;

    Observation(IndexSet j, std::vector<Symbol> syms);

    // One "index:HEX" pair per line, sorted by index.
    std::string to_text(const Field& f) const;
    static Observation parse(const Field& f, std::string_view text);
};

// Exact rate as an unreduced fraction, e.g. 50/255.
struct Fraction {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Secrecy capacity (nu - mu)/n of the erasure-erasure wiretap channel.
Fraction capacity(int n, int nu, int mu);

// Nested coset coding scheme: secret S encoded with C, randomizer E with C*,
// transmitted codeword X = S*G + E*G*. Any nu symbols determine S; any mu
// symbols reveal nothing when the codes are chosen well.
class NestedScheme {
public:
    NestedScheme(int nu, int mu, LinearCode message_code, LinearCode randomizer_code);

    const Field& field() const { return message_code_.field(); }
    const FieldPtr& field_ptr() const { return message_code_.field_ptr(); }
    int n() const { return message_code_.n(); }
    int nu() const { return nu_; }
    int mu() const { return mu_; }
    int k() const { return message_code_.k(); }
    int kstar() const { return randomizer_code_.k(); }

    const LinearCode& message_code() const { return message_code_; }      // C
    const LinearCode& randomizer_code() const { return randomizer_code_; }  // C*
    const LinearCode& sum_code() const { return sum_code_; }              // D = C + C*
    // G stacked over G*, the (k + k*) x n encoder matrix.
    const Matrix& stacked_generator() const { return sum_code_.generator(); }

    std::vector<Symbol> encode(std::span<const Symbol> secret,
                               std::span<const Symbol> randomizer) const;

    struct Encoded {
        std::vector<Symbol> codeword;
        std::vector<Symbol> randomizer;
    };
    // Draws E uniformly from the seeded stream and encodes.
    Encoded encode_random(std::span<const Symbol> secret, Rng& rng) const;
    Encoded encode_random(std::span<const Symbol> secret, std::uint64_t seed) const;

    // Recovers S from any observation that pins it down uniquely. Throws
    // Inconsistent when the observation matches no codeword and
    // AmbiguousSecret when several secrets remain possible.
    std::vector<Symbol> decode(const Observation& obs) const;

private:
    int nu_;
    int mu_;
    LinearCode message_code_;
    LinearCode randomizer_code_;
    LinearCode sum_code_;
};

// Classic coset coding as the k* = n - k special case: perfect main channel
// (nu = n), D the whole space, C a complement of C* on the non-pivot
// coordinates of its reduced generator. mu defaults to n - k, the largest
// value the capacity bound allows.
NestedScheme ozarow_wyner_scheme(const LinearCode& randomizer_code);
NestedScheme ozarow_wyner_scheme(const LinearCode& randomizer_code, int mu);

}  // namespace eewt
