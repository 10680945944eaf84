#include "eewt/codes.hpp"

#include <algorithm>
#include <set>

#include "eewt/combinatorics.hpp"
#include "eewt/rng.hpp"

namespace eewt {

Polynomial::Polynomial(FieldPtr field, std::vector<Symbol> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Symbol c : coeffs_)
        if (c >= field_->size()) throw Error("polynomial coefficient outside field");
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(FieldPtr field, std::span<const Symbol> roots) {
    Polynomial acc = Polynomial::one(field);
    for (Symbol r : roots) {
        Polynomial factor(field, {field->neg(r), 1});  // x - r
        acc = acc * factor;
    }
    return acc;
}

Symbol Polynomial::eval(Symbol x) const {
    Symbol acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = field_->add(field_->mul(acc, x), coeffs_[i]);
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_field(*field_, *other.field_);
    std::vector<Symbol> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = field_->add(coeff(static_cast<int>(i)), other.coeff(static_cast<int>(i)));
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_field(*field_, *other.field_);
    if (is_zero() || other.is_zero()) return Polynomial::zero(field_);
    std::vector<Symbol> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], other.coeffs_[j]));
    }
    return Polynomial(field_, std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    check_same_field(*field_, *divisor.field_);
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Symbol> rem = coeffs_;
    std::vector<Symbol> quot;
    const int dd = divisor.degree();
    if (degree() >= dd) quot.assign(static_cast<size_t>(degree() - dd) + 1, 0);
    Symbol lead_inv = field_->inv(divisor.coeffs_.back());
    while (static_cast<int>(rem.size()) - 1 >= dd && !rem.empty()) {
        int shift = static_cast<int>(rem.size()) - 1 - dd;
        Symbol factor = field_->mul(rem.back(), lead_inv);
        quot[static_cast<size_t>(shift)] = factor;
        for (int i = 0; i <= dd; ++i) {
            Symbol& r = rem[static_cast<size_t>(shift + i)];
            r = field_->sub(r, field_->mul(factor, divisor.coeffs_[static_cast<size_t>(i)]));
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

LinearCode::LinearCode(Matrix generator) : generator_(std::move(generator)) {
    if (generator_.rows() > generator_.cols())
        throw BadDimensions("code dimension exceeds length");
    if (rank(generator_) != generator_.rows())
        throw RankDeficient("generator matrix is not full rank");
}

int LinearCode::shortened_dim(const IndexSet& j) const {
    for (int c : j)
        if (c >= n()) throw Error("index out of range in shortening set");
    return k() - rank(generator_.select_columns(j));
}

LinearCode rs_eval_code(FieldPtr field, std::span<const Symbol> points, int first_degree,
                        int dim) {
    if (dim < 0 || first_degree < 0) throw InvalidDimension("negative RS parameter");
    std::set<Symbol> seen;
    for (Symbol p : points) {
        if (p >= field->size()) throw Error("evaluation point outside field");
        if (!seen.insert(p).second) throw DuplicatePoints("repeated evaluation point");
        if (first_degree > 0 && p == 0)
            throw ZeroPointWithShift("point 0 is not usable with a positive degree shift");
    }
    const int n = static_cast<int>(points.size());
    Matrix g(field, dim, n);
    for (int j = 0; j < n; ++j) {
        Symbol v = field->pow(points[static_cast<size_t>(j)], first_degree);
        for (int i = 0; i < dim; ++i) {
            g.at(i, j) = v;
            v = field->mul(v, points[static_cast<size_t>(j)]);
        }
    }
    return LinearCode(std::move(g));
}

CyclicRsCode rs_cyclic_code(FieldPtr field, int dim) {
    const int n = static_cast<int>(field->size()) - 1;
    if (dim < 1 || dim > n) throw InvalidDimension("cyclic RS dimension must be in [1, q-1]");
    const Symbol alpha = field->primitive_element();
    std::vector<Symbol> roots;
    roots.reserve(static_cast<size_t>(n - dim));
    Symbol r = alpha;
    for (int i = 1; i <= n - dim; ++i) {
        roots.push_back(r);
        r = field->mul(r, alpha);
    }
    Polynomial g = Polynomial::from_roots(field, roots);
    Matrix gen(field, dim, n);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j <= g.degree(); ++j) gen.at(i, i + j) = g.coeff(j);
    return {LinearCode(std::move(gen)), std::move(g)};
}

std::vector<Symbol> alpha_powers(const Field& f, int n) {
    if (n > static_cast<int>(f.size()) - 1)
        throw Error("need n <= q-1 distinct powers of the primitive element");
    std::vector<Symbol> pts(static_cast<size_t>(n));
    Symbol v = 1;
    for (int i = 0; i < n; ++i) {
        pts[static_cast<size_t>(i)] = v;
        v = f.mul(v, f.primitive_element());
    }
    return pts;
}

int dlp(const LinearCode& code, int i) {
    const int n = code.n();
    if (i < 0 || i > n) throw Error("dlp support size out of range");
    if (n > 24)
        throw ExhaustiveTooLarge("dlp enumeration rejected for n > 24; use dlp_sampled");
    int best = 0;
    for_each_subset(n, i, [&](const std::vector<int>& support) {
        IndexSet t{std::vector<int>(support)};
        best = std::max(best, code.shortened_dim(t.complement(n)));
    });
    return best;
}

int dlp_sampled(const LinearCode& code, int i, std::uint64_t trials, std::uint64_t seed) {
    const int n = code.n();
    if (i < 0 || i > n) throw Error("dlp support size out of range");
    Rng rng(seed);
    std::vector<int> perm(static_cast<size_t>(n));
    int best = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (int j = 0; j < n; ++j) perm[static_cast<size_t>(j)] = j;
        for (int j = 0; j < i; ++j)
            std::swap(perm[static_cast<size_t>(j)],
                      perm[static_cast<size_t>(j) + rng.below(static_cast<std::uint32_t>(n - j))]);
        IndexSet support{std::vector<int>(perm.begin(), perm.begin() + i)};
        best = std::max(best, code.shortened_dim(support.complement(n)));
    }
    return best;
}

bool is_mds(const LinearCode& code) {
    const int n = code.n();
    const int k = code.k();
    if (k == 0) return true;
    if (binomial(n, k) > 10'000'000ull)
        throw ExhaustiveTooLarge("MDS check rejected: too many column subsets");
    bool mds = true;
    for_each_subset(n, k, [&](const std::vector<int>& cols) {
        if (!mds) return;
        IndexSet j{std::vector<int>(cols)};
        if (rank(code.generator().select_columns(j)) != k) mds = false;
    });
    return mds;
}

bool is_subcode(const LinearCode& inner, const LinearCode& outer) {
    check_same_field(inner.field(), outer.field());
    if (inner.n() != outer.n()) throw BadDimensions("code length mismatch");
    return rank(outer.generator().vstack(inner.generator())) == outer.k();
}

bool trivial_intersection(const LinearCode& a, const LinearCode& b) {
    check_same_field(a.field(), b.field());
    if (a.n() != b.n()) throw BadDimensions("code length mismatch");
    return rank(a.generator().vstack(b.generator())) == a.k() + b.k();
}

}  // namespace eewt
