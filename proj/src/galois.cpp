#include "eewt/galois.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace eewt {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// --- polynomials over GF(p), coefficient vectors, low degree first ---

void pm_trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<int> pm_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    pm_trim(r);
    return r;
}

// Remainder of a modulo a monic divisor.
std::vector<int> pm_mod(std::vector<int> a, const std::vector<int>& monic, int p) {
    pm_trim(a);
    const int d = static_cast<int>(monic.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= d) {
        int shift = static_cast<int>(a.size()) - 1 - d;
        int lead = a.back();
        for (int i = 0; i <= d; ++i) {
            int& c = a[shift + i];
            c = ((c - lead * monic[i]) % p + p) % p;
        }
        pm_trim(a);
    }
    return a;
}

std::vector<int> value_to_digits(std::uint32_t v, int p) {
    std::vector<int> d;
    while (v != 0) {
        d.push_back(static_cast<int>(v % static_cast<std::uint32_t>(p)));
        v /= static_cast<std::uint32_t>(p);
    }
    return d;
}

std::uint32_t digits_to_value(const std::vector<int>& d, int p) {
    std::uint32_t v = 0;
    for (size_t i = d.size(); i-- > 0;)
        v = v * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(d[i]);
    return v;
}

std::vector<int> prime_factors(std::uint32_t n) {
    std::vector<int> fs;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(static_cast<int>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(static_cast<int>(n));
    return fs;
}

}  // namespace

Symbol Field::add_general(Symbol a, Symbol b) const {
    std::uint32_t r = 0, base = 1;
    std::uint32_t x = a, y = b;
    for (int i = 0; i < m_; ++i) {
        std::uint32_t up = static_cast<std::uint32_t>(p_);
        r += ((x % up + y % up) % up) * base;
        x /= up;
        y /= up;
        base *= up;
    }
    return static_cast<Symbol>(r);
}

Symbol Field::neg_general(Symbol a) const {
    std::uint32_t r = 0, base = 1;
    std::uint32_t x = a;
    std::uint32_t up = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < m_; ++i) {
        r += ((up - x % up) % up) * base;
        x /= up;
        base *= up;
    }
    return static_cast<Symbol>(r);
}

Symbol Field::mul_poly(Symbol a, Symbol b) const {
    auto da = value_to_digits(a, p_);
    auto db = value_to_digits(b, p_);
    auto prod = pm_mod(pm_mul(da, db, p_), modulus_, p_);
    return static_cast<Symbol>(digits_to_value(prod, p_));
}

Symbol Field::inv(Symbol a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    return exp_[q_ - 1 - static_cast<std::uint32_t>(log_[a])];
}

Symbol Field::pow(Symbol a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw DivisionByZero("negative power of zero");
        return 0;
    }
    const long long order = static_cast<long long>(q_) - 1;
    long long r = e % order;
    if (r < 0) r += order;
    long long idx = (static_cast<long long>(log_[a]) * r) % order;
    return exp_[static_cast<std::uint32_t>(idx)];
}

FieldPtr field_new(int p, int m, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw Error("characteristic must be prime");
    if (m < 1) throw Error("extension degree must be positive");

    std::uint64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > (1u << 16))
            throw UnsupportedSize("field size exceeds 2^16");
    }

    if (modulus.size() != static_cast<size_t>(m) + 1)
        throw Error("modulus must have exactly m+1 coefficients");
    if (modulus.back() != 1)
        throw Error("modulus must be monic");
    for (int c : modulus)
        if (c < 0 || c >= p) throw Error("modulus coefficient out of range");

    // Irreducibility by trial division against all monic polynomials of
    // degree 1..m/2.
    for (int d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t lo = 0; lo < count; ++lo) {
            std::vector<int> cand = value_to_digits(static_cast<std::uint32_t>(lo), p);
            cand.resize(static_cast<size_t>(d) + 1, 0);
            cand[static_cast<size_t>(d)] = 1;
            if (pm_mod(modulus, cand, p).empty())
                throw ReducibleModulus("modulus factors over GF(p)");
        }
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<std::uint32_t>(q);
    f->modulus_ = modulus;
    f->modulus_value_ = digits_to_value(modulus, p);
    std::uint32_t maxval = f->q_ - 1;
    f->hex_width_ = 1;
    while (maxval >> (4 * f->hex_width_)) ++f->hex_width_;

    // Multiplicative order check without tables: square-and-multiply on the
    // reduction path.
    auto pow_poly = [&f](Symbol base, std::uint32_t e) {
        Symbol r = 1;
        Symbol b = base;
        while (e) {
            if (e & 1) r = f->mul_poly(r, b);
            b = f->mul_poly(b, b);
            e >>= 1;
        }
        return r;
    };

    const std::uint32_t order = f->q_ - 1;
    auto factors = prime_factors(order);
    Symbol g = 0;
    for (std::uint32_t v = 1; v < f->q_; ++v) {
        bool primitive = true;
        for (int pf : factors) {
            if (pow_poly(static_cast<Symbol>(v), order / static_cast<std::uint32_t>(pf)) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = static_cast<Symbol>(v);
            break;
        }
    }
    f->primitive_ = g;

    f->exp_.assign(2 * static_cast<size_t>(order), 0);
    f->log_.assign(f->q_, 0);
    Symbol cur = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        f->exp_[i] = cur;
        f->exp_[i + order] = cur;
        f->log_[cur] = static_cast<int>(i);
        cur = f->mul_poly(cur, g);
    }
    return f;
}

FieldPtr default_binary_field(int m) {
    // Conventional primitive polynomials, bit i = coefficient of x^i.
    static const std::uint32_t polys[17] = {
        0,      0x3,    0x7,    0xB,    0x13,   0x25,  0x43,  0x89,
        0x11D,  0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003,
        0x1100B};
    if (m < 1 || m > 16)
        throw UnsupportedSize("binary fields are supported for 1 <= m <= 16");
    std::vector<int> coeffs(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) coeffs[static_cast<size_t>(i)] = (polys[m] >> i) & 1;
    return field_new(2, m, coeffs);
}

std::string field_spec_string(const Field& f) {
    std::ostringstream os;
    os << "gf(" << f.characteristic() << "^" << f.degree() << ",modulus=0x"
       << std::uppercase << std::hex << f.modulus_value() << ")";
    return os.str();
}

FieldPtr parse_field_spec(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

    auto fail = [&]() -> FieldPtr {
        throw ParseError("bad field spec '" + std::string(text) +
                         "', expected gf(p^m,modulus=0xHEX)");
    };
    if (s.size() < 6 || s.substr(0, 3) != "gf(" || s.back() != ')') return fail();
    std::string body = s.substr(3, s.size() - 4);
    auto caret = body.find('^');
    auto comma = body.find(',');
    if (caret == std::string::npos || comma == std::string::npos || caret > comma) return fail();
    std::string mod_part = body.substr(comma + 1);
    if (mod_part.substr(0, 10) != "modulus=0x" && mod_part.substr(0, 10) != "modulus=0X") return fail();

    int p = 0, m = 0;
    std::uint64_t mod_val = 0;
    try {
        p = std::stoi(body.substr(0, caret));
        m = std::stoi(body.substr(caret + 1, comma - caret - 1));
        mod_val = std::stoull(mod_part.substr(10), nullptr, 16);
    } catch (const std::exception&) {
        return fail();
    }
    if (p < 2 || m < 1 || mod_val > 0xFFFFFFFFull) return fail();

    std::vector<int> coeffs;
    std::uint64_t v = mod_val;
    while (v != 0) {
        coeffs.push_back(static_cast<int>(v % static_cast<std::uint64_t>(p)));
        v /= static_cast<std::uint64_t>(p);
    }
    if (coeffs.size() != static_cast<size_t>(m) + 1)
        throw ParseError("field spec modulus has degree " +
                         std::to_string(coeffs.empty() ? 0 : coeffs.size() - 1) +
                         ", expected " + std::to_string(m));
    return field_new(p, m, coeffs);
}

std::string symbols_to_hex(const Field& f, std::span<const Symbol> v) {
    static const char* digits = "0123456789ABCDEF";
    std::string out;
    out.reserve(v.size() * static_cast<size_t>(f.hex_width()));
    for (Symbol s : v)
        for (int i = f.hex_width() - 1; i >= 0; --i)
            out.push_back(digits[(s >> (4 * i)) & 0xF]);
    return out;
}

std::vector<Symbol> symbols_from_hex(const Field& f, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    const int w = f.hex_width();
    if (s.size() % static_cast<size_t>(w) != 0)
        throw ParseError("hex symbol string length is not a multiple of the symbol width");
    std::vector<Symbol> out;
    out.reserve(s.size() / static_cast<size_t>(w));
    for (size_t i = 0; i < s.size(); i += static_cast<size_t>(w)) {
        std::uint32_t v = 0;
        for (int j = 0; j < w; ++j) {
            char c = s[i + static_cast<size_t>(j)];
            int d;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
            else throw ParseError("bad hex digit in symbol string");
            v = (v << 4) | static_cast<std::uint32_t>(d);
        }
        if (v >= f.size())
            throw ParseError("symbol value " + std::to_string(v) + " outside field of size " +
                             std::to_string(f.size()));
        out.push_back(static_cast<Symbol>(v));
    }
    return out;
}

}  // namespace eewt
