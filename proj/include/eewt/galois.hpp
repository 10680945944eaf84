#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eewt/error.hpp"

namespace eewt {

// Field symbols are stored in index form: the integer whose base-p digits
// are the polynomial-basis coefficients, digit i = coefficient of x^i.
// For p = 2 that makes bit i of the value the coefficient of x^i.
using Symbol = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^m), q = p^m <= 2^16. Immutable after construction; exp/log tables
// over a primitive element back multiplication and inversion.
class Field {
public:
    int characteristic() const { return p_; }
    int degree() const { return m_; }
    std::uint32_t size() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }
    // Modulus as the integer whose base-p digits are its coefficients.
    std::uint32_t modulus_value() const { return modulus_value_; }

    Symbol add(Symbol a, Symbol b) const { return p_ == 2 ? a ^ b : add_general(a, b); }
    Symbol sub(Symbol a, Symbol b) const {
        return p_ == 2 ? a ^ b : add_general(a, neg_general(b));
    }
    Symbol neg(Symbol a) const { return p_ == 2 ? a : neg_general(a); }
    Symbol mul(Symbol a, Symbol b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    // Schoolbook multiply-and-reduce path; cross-checks the tables.
    Symbol mul_poly(Symbol a, Symbol b) const;
    Symbol inv(Symbol a) const;
    Symbol pow(Symbol a, long long e) const;

    // Smallest-valued element of multiplicative order q - 1.
    Symbol primitive_element() const { return primitive_; }

    // Hex digits per symbol in every serialized form.
    int hex_width() const { return hex_width_; }

    bool operator==(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

    friend FieldPtr field_new(int p, int m, const std::vector<int>& modulus);

private:
    Field() = default;

    Symbol add_general(Symbol a, Symbol b) const;
    Symbol neg_general(Symbol a) const;

    int p_ = 0;
    int m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<int> modulus_;       // coefficients, low degree first, monic
    std::uint32_t modulus_value_ = 0;
    int hex_width_ = 1;
    Symbol primitive_ = 0;
    std::vector<Symbol> exp_;        // length 2(q-1), exp[i] = g^i
    std::vector<int> log_;           // length q, log[g^i] = i
};

// Builds and validates GF(p^m) from a monic degree-m modulus over GF(p).
// Throws UnsupportedSize when p^m > 2^16 and ReducibleModulus when the
// modulus factors (trial division by all monic polynomials of degree <= m/2).
FieldPtr field_new(int p, int m, const std::vector<int>& modulus);

// GF(2^m) with the stock modulus for that degree (0x11D for m = 8).
FieldPtr default_binary_field(int m);

// Textual field spec: gf(p^m,modulus=0xHEX). The modulus integer's base-p
// digits are the coefficients.
FieldPtr parse_field_spec(std::string_view text);
std::string field_spec_string(const Field& f);

inline void check_same_field(const Field& a, const Field& b) {
    if (a != b) throw FieldMismatch("operands belong to different fields");
}

// Fixed-width uppercase hex, hex_width() digits per symbol, no separators.
std::string symbols_to_hex(const Field& f, std::span<const Symbol> v);
std::vector<Symbol> symbols_from_hex(const Field& f, std::string_view text);

}  // namespace eewt
