#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eewt/galois.hpp"

using namespace eewt;

namespace {

// Independent GF(2^m) multiply: carry-less product, then long division by
// the modulus bits. Used to pin the library's arithmetic.
std::uint32_t clmul_reduce(std::uint32_t a, std::uint32_t b, std::uint32_t mod_bits, int m) {
    std::uint64_t prod = 0;
    for (int i = 0; i < 32; ++i)
        if ((a >> i) & 1) prod ^= static_cast<std::uint64_t>(b) << i;
    for (int d = 62; d >= m; --d)
        if ((prod >> d) & 1) prod ^= static_cast<std::uint64_t>(mod_bits) << (d - m);
    return static_cast<std::uint32_t>(prod);
}

std::vector<int> bits_to_coeffs(std::uint32_t bits, int m) {
    std::vector<int> c(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) c[static_cast<size_t>(i)] = (bits >> i) & 1;
    return c;
}

}  // namespace

TEST_CASE("field construction") {
    auto gf8 = field_new(2, 3, bits_to_coeffs(0xB, 3));
    CHECK(gf8->size() == 8);
    CHECK(gf8->characteristic() == 2);
    CHECK(gf8->degree() == 3);
    CHECK(gf8->modulus_value() == 0xB);

    auto gf256 = field_new(2, 8, bits_to_coeffs(0x11D, 8));
    CHECK(gf256->size() == 256);

    // (x+1)^2 = x^2 + 1 over GF(2)
    CHECK_THROWS_AS(field_new(2, 2, bits_to_coeffs(0x5, 2)), ReducibleModulus);
    // x^17 + x^3 + 1 would give q = 2^17
    CHECK_THROWS_AS(field_new(2, 17, bits_to_coeffs(0x20009, 17)), UnsupportedSize);

    CHECK_THROWS_AS(field_new(2, 3, {1, 1, 0, 0}), Error);      // not monic
    CHECK_THROWS_AS(field_new(2, 3, {1, 1, 1}), Error);         // wrong length
    CHECK_THROWS_AS(field_new(4, 2, {1, 1, 1}), Error);         // 4 is not prime
}

TEST_CASE("frozen products against the long-division oracle") {
    auto gf8 = field_new(2, 3, bits_to_coeffs(0xB, 3));
    // alpha * alpha^2 = alpha^3 = x + 1
    CHECK(clmul_reduce(0b010, 0b100, 0xB, 3) == 0b011);
    CHECK(gf8->mul(0b010, 0b100) == 0b011);
    CHECK(gf8->mul_poly(0b010, 0b100) == 0b011);

    auto gf256 = field_new(2, 8, bits_to_coeffs(0x11D, 8));
    CHECK(clmul_reduce(0x80, 0x02, 0x11D, 8) == 0x1D);
    CHECK(gf256->mul(0x80, 0x02) == 0x1D);
    CHECK(gf256->mul_poly(0x80, 0x02) == 0x1D);
}

TEST_CASE("table multiply agrees with polynomial reduction everywhere") {
    for (auto f : {field_new(2, 3, bits_to_coeffs(0xB, 3)), default_binary_field(4),
                   default_binary_field(8), field_new(3, 2, {1, 0, 1})}) {
        for (std::uint32_t a = 0; a < f->size(); ++a)
            for (std::uint32_t b = 0; b < f->size(); ++b)
                REQUIRE(f->mul(static_cast<Symbol>(a), static_cast<Symbol>(b)) ==
                        f->mul_poly(static_cast<Symbol>(a), static_cast<Symbol>(b)));
    }
}

TEST_CASE("field axioms, randomized for GF(256)") {
    auto f = default_binary_field(8);
    std::mt19937_64 gen(404);
    for (int t = 0; t < 2000; ++t) {
        Symbol a = static_cast<Symbol>(gen() & 0xFF);
        Symbol b = static_cast<Symbol>(gen() & 0xFF);
        Symbol c = static_cast<Symbol>(gen() & 0xFF);
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
        CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    }
}

TEST_CASE("field axioms, exhaustive for small fields") {
    auto gf8 = field_new(2, 3, bits_to_coeffs(0xB, 3));
    auto gf9 = field_new(3, 2, {1, 0, 1});  // x^2 + 1 over GF(3)
    auto gf5 = field_new(5, 1, {0, 1});     // prime field via modulus x
    for (auto f : {gf8, gf9, gf5}) {
        const std::uint32_t q = f->size();
        for (std::uint32_t a = 0; a < q; ++a) {
            Symbol sa = static_cast<Symbol>(a);
            CHECK(f->add(sa, 0) == sa);
            CHECK(f->mul(sa, 1) == sa);
            CHECK(f->add(sa, f->neg(sa)) == 0);
            for (std::uint32_t b = 0; b < q; ++b) {
                Symbol sb = static_cast<Symbol>(b);
                CHECK(f->add(sa, sb) == f->add(sb, sa));
                CHECK(f->mul(sa, sb) == f->mul(sb, sa));
                for (std::uint32_t c = 0; c < q; ++c) {
                    Symbol sc = static_cast<Symbol>(c);
                    CHECK(f->add(f->add(sa, sb), sc) == f->add(sa, f->add(sb, sc)));
                    CHECK(f->mul(f->mul(sa, sb), sc) == f->mul(sa, f->mul(sb, sc)));
                    CHECK(f->mul(sa, f->add(sb, sc)) == f->add(f->mul(sa, sb), f->mul(sa, sc)));
                }
            }
        }
    }
}

TEST_CASE("characteristic 2: every element is its own negative") {
    auto f = default_binary_field(4);
    for (std::uint32_t a = 0; a < f->size(); ++a)
        CHECK(f->add(static_cast<Symbol>(a), static_cast<Symbol>(a)) == 0);
}

TEST_CASE("inverses") {
    auto f = default_binary_field(8);
    CHECK_THROWS_AS(f->inv(0), DivisionByZero);
    for (std::uint32_t a = 1; a < f->size(); ++a)
        CHECK(f->mul(static_cast<Symbol>(a), f->inv(static_cast<Symbol>(a))) == 1);
}

TEST_CASE("primitive elements and pow") {
    auto gf8 = field_new(2, 3, bits_to_coeffs(0xB, 3));
    CHECK(gf8->primitive_element() == 0b010);

    auto gf2 = field_new(2, 1, {1, 1});
    CHECK(gf2->primitive_element() == 1);

    auto gf256 = default_binary_field(8);
    CHECK(gf256->primitive_element() == 0x02);

    for (auto f : {gf8, gf256}) {
        const std::uint32_t order = f->size() - 1;
        Symbol g = f->primitive_element();
        CHECK(f->pow(g, order) == 1);
        for (std::uint32_t d = 1; d < order; ++d)
            if (order % d == 0) CHECK(f->pow(g, d) != 1);
    }

    CHECK(gf8->pow(0, 0) == 1);
    CHECK(gf8->pow(0, 5) == 0);
    CHECK_THROWS_AS(gf8->pow(0, -1), DivisionByZero);
    CHECK(gf8->pow(3, -1) == gf8->inv(3));
}

TEST_CASE("pow matches repeated multiplication") {
    auto f = default_binary_field(8);
    for (Symbol a : {Symbol{1}, Symbol{2}, Symbol{0x53}, Symbol{0xFF}}) {
        Symbol acc = 1;
        for (int e = 0; e < 20; ++e) {
            CHECK(f->pow(a, e) == acc);
            acc = f->mul(acc, a);
        }
    }
}

TEST_CASE("field spec strings round-trip") {
    auto f = default_binary_field(8);
    CHECK(field_spec_string(*f) == "gf(2^8,modulus=0x11D)");
    auto g = parse_field_spec("gf(2^8, modulus=0x11D)");
    CHECK(*f == *g);
    auto h = parse_field_spec(field_spec_string(*field_new(3, 2, {1, 0, 1})));
    CHECK(h->size() == 9);

    CHECK_THROWS_AS(parse_field_spec("gf(2^8)"), ParseError);
    CHECK_THROWS_AS(parse_field_spec("gf(2^8,modulus=0x11)"), ParseError);  // degree mismatch
}

TEST_CASE("field equality is structural") {
    auto a = field_new(2, 3, bits_to_coeffs(0xB, 3));
    auto b = field_new(2, 3, bits_to_coeffs(0xB, 3));
    auto c = field_new(2, 3, bits_to_coeffs(0xD, 3));  // x^3 + x^2 + 1
    CHECK(*a == *b);
    CHECK(*a != *c);
}

TEST_CASE("symbol hex serialization") {
    auto gf8 = default_binary_field(3);
    auto gf256 = default_binary_field(8);
    std::vector<Symbol> v{0, 5, 7};
    CHECK(symbols_to_hex(*gf8, v) == "057");
    CHECK(symbols_from_hex(*gf8, "057") == v);
    std::vector<Symbol> w{0x00, 0xAB, 0x1D};
    CHECK(symbols_to_hex(*gf256, w) == "00AB1D");
    CHECK(symbols_from_hex(*gf256, "00ab1d") == w);
    CHECK_THROWS_AS(symbols_from_hex(*gf256, "0AB"), ParseError);   // width violation
    CHECK_THROWS_AS(symbols_from_hex(*gf8, "9"), ParseError);       // outside field
}
