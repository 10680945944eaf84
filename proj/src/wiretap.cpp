#include "eewt/wiretap.hpp"

#include <algorithm>
#include <sstream>

namespace eewt {

Observation::Observation(IndexSet j, std::vector<Symbol> syms)
    : revealed(std::move(j)), symbols(std::move(syms)) {
    if (revealed.size() != static_cast<int>(symbols.size()))
        throw LengthMismatch("observation symbol count does not match index set size");
}

std::string Observation::to_text(const Field& f) const {
    std::ostringstream os;
    for (int i = 0; i < revealed.size(); ++i) {
        std::vector<Symbol> one{symbols[static_cast<size_t>(i)]};
        os << revealed[i] << ":" << symbols_to_hex(f, one) << "\n";
    }
    return os.str();
}

Observation Observation::parse(const Field& f, std::string_view text) {
    std::vector<int> idx;
    std::vector<Symbol> syms;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("observation line missing ':'");
        int index;
        try {
            index = std::stoi(line.substr(0, colon));
        } catch (const std::exception&) {
            throw ParseError("bad index in observation line");
        }
        auto vals = symbols_from_hex(f, line.substr(colon + 1));
        if (vals.size() != 1) throw ParseError("observation line must hold one symbol");
        idx.push_back(index);
        syms.push_back(vals[0]);
    }
    // IndexSet sorts; keep symbols aligned with their indices.
    std::vector<size_t> order(idx.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return idx[a] < idx[b]; });
    std::vector<int> sorted_idx;
    std::vector<Symbol> sorted_syms;
    for (size_t i : order) {
        sorted_idx.push_back(idx[i]);
        sorted_syms.push_back(syms[i]);
    }
    return Observation(IndexSet(std::move(sorted_idx)), std::move(sorted_syms));
}

Fraction capacity(int n, int nu, int mu) {
    if (n <= 0 || nu < 0 || mu < 0 || nu > n)
        throw InvalidParams("capacity needs 0 <= mu <= nu <= n");
    if (mu > nu) throw InvalidParams("mu exceeds nu");
    return Fraction{nu - mu, n};
}

NestedScheme::NestedScheme(int nu, int mu, LinearCode message_code, LinearCode randomizer_code)
    : nu_(nu),
      mu_(mu),
      message_code_(std::move(message_code)),
      randomizer_code_(std::move(randomizer_code)),
      sum_code_([&] {
          check_same_field(message_code_.field(), randomizer_code_.field());
          if (message_code_.n() != randomizer_code_.n())
              throw BadDimensions("message and randomizer codes differ in length");
          const int n = message_code_.n();
          const int k = message_code_.k();
          const int ks = randomizer_code_.k();
          if (ks > n - k)
              throw BadDimensions("randomizer dimension exceeds n - k");
          if (mu_ < 0 || mu_ > nu_ || nu_ > n)
              throw BadDimensions("need 0 <= mu <= nu <= n");
          if (k > nu_ - mu_)
              throw CapacityViolation("secret dimension " + std::to_string(k) +
                                      " exceeds nu - mu = " + std::to_string(nu_ - mu_));
          if (!trivial_intersection(message_code_, randomizer_code_))
              throw IntersectionNotTrivial("message and randomizer codes intersect");
          return LinearCode(message_code_.generator().vstack(randomizer_code_.generator()));
      }()) {}

std::vector<Symbol> NestedScheme::encode(std::span<const Symbol> secret,
                                         std::span<const Symbol> randomizer) const {
    if (static_cast<int>(secret.size()) != k())
        throw LengthMismatch("secret must have k symbols");
    if (static_cast<int>(randomizer.size()) != kstar())
        throw LengthMismatch("randomizer must have k* symbols");
    std::vector<Symbol> both(secret.begin(), secret.end());
    both.insert(both.end(), randomizer.begin(), randomizer.end());
    return vec_mat_mul(both, stacked_generator());
}

NestedScheme::Encoded NestedScheme::encode_random(std::span<const Symbol> secret, Rng& rng) const {
    std::vector<Symbol> e(static_cast<size_t>(kstar()));
    for (auto& s : e) s = static_cast<Symbol>(rng.below(field().size()));
    auto x = encode(secret, e);
    return {std::move(x), std::move(e)};
}

NestedScheme::Encoded NestedScheme::encode_random(std::span<const Symbol> secret,
                                                  std::uint64_t seed) const {
    Rng rng(seed);
    return encode_random(secret, rng);
}

std::vector<Symbol> NestedScheme::decode(const Observation& obs) const {
    for (int i : obs.revealed)
        if (i >= n()) throw Error("observation index out of range");
    Matrix restricted = stacked_generator().select_columns(obs.revealed);
    auto sol = solve_all(restricted, obs.symbols);
    if (!sol)
        throw Inconsistent("observation is not the restriction of any codeword");
    // The secret is unique iff no kernel vector moves the S-part.
    bool ambiguous = false;
    for (const auto& v : sol->kernel) {
        for (int i = 0; i < k(); ++i) {
            if (v[static_cast<size_t>(i)] != 0) {
                ambiguous = true;
                break;
            }
        }
        if (ambiguous) break;
    }
    if (ambiguous) {
        int gap = sum_code_.shortened_dim(obs.revealed) -
                  randomizer_code_.shortened_dim(obs.revealed);
        throw AmbiguousSecret(gap);
    }
    return {sol->particular.begin(), sol->particular.begin() + k()};
}

NestedScheme ozarow_wyner_scheme(const LinearCode& randomizer_code) {
    return ozarow_wyner_scheme(randomizer_code,
                               randomizer_code.n() - randomizer_code.k());
}

NestedScheme ozarow_wyner_scheme(const LinearCode& randomizer_code, int mu) {
    const int n = randomizer_code.n();
    const int k = n - randomizer_code.k();
    // Complement spanned by unit vectors at the non-pivot columns of C*.
    IndexSet pivots = rref(randomizer_code.generator()).pivots;
    Matrix g(randomizer_code.field_ptr(), k, n);
    int row = 0;
    for (int c : pivots.complement(n)) g.at(row++, c) = 1;
    return NestedScheme(n, mu, LinearCode(std::move(g)), randomizer_code);
}

}  // namespace eewt
