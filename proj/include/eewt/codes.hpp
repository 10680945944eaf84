#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "eewt/matrix.hpp"

namespace eewt {

// Polynomial over a field, coefficients low degree first, no trailing zeros.
class Polynomial {
public:
    Polynomial(FieldPtr field, std::vector<Symbol> coeffs);
    static Polynomial zero(FieldPtr field) { return Polynomial(std::move(field), {}); }
    static Polynomial one(FieldPtr field) { return Polynomial(std::move(field), {1}); }
    // Monic polynomial with exactly the given roots (with multiplicity).
    static Polynomial from_roots(FieldPtr field, std::span<const Symbol> roots);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    Symbol coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<size_t>(i)] : 0;
    }
    const std::vector<Symbol>& coeffs() const { return coeffs_; }

    Symbol eval(Symbol x) const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    // Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    bool operator==(const Polynomial& other) const {
        return *field_ == *other.field_ && coeffs_ == other.coeffs_;
    }

private:
    FieldPtr field_;
    std::vector<Symbol> coeffs_;
};

inline bool divides(const Polynomial& d, const Polynomial& a) {
    return a.divmod(d).second.is_zero();
}

// (n, k) linear block code, generator held as a full-rank k x n matrix.
class LinearCode {
public:
    explicit LinearCode(Matrix generator);  // throws RankDeficient

    int n() const { return generator_.cols(); }
    int k() const { return generator_.rows(); }
    const Matrix& generator() const { return generator_; }
    const Field& field() const { return generator_.field(); }
    const FieldPtr& field_ptr() const { return generator_.field_ptr(); }

    // dim{c in C : c_j = 0} = k - rank(columns j of the generator).
    int shortened_dim(const IndexSet& j) const;

private:
    Matrix generator_;
};

// Evaluation-form (generalized) Reed-Solomon code: generator row i holds
// points_j^(first_degree + i). MDS whenever the points are distinct (nonzero
// when first_degree > 0) and first_degree + dim <= |points|.
LinearCode rs_eval_code(FieldPtr field, std::span<const Symbol> points, int first_degree, int dim);

struct CyclicRsCode {
    LinearCode code;
    Polynomial gpoly;
};

// Cyclic Reed-Solomon code of length q-1: generator polynomial with roots
// alpha^1..alpha^(n-k), generator matrix rows the k shifts x^i * g(x).
CyclicRsCode rs_cyclic_code(FieldPtr field, int dim);

// alpha^0 .. alpha^(n-1); requires n <= q-1 so the points are distinct.
std::vector<Symbol> alpha_powers(const Field& f, int n);

// i-th dimension/length profile: the largest dimension of a subcode whose
// support fits inside some size-i index set. Exhaustive over all C(n, i)
// supports; rejects n > 24.
int dlp(const LinearCode& code, int i);
// Sampled lower bound on dlp for lengths where enumeration is infeasible.
int dlp_sampled(const LinearCode& code, int i, std::uint64_t trials, std::uint64_t seed);

// True iff every k columns of the generator are linearly independent.
// Rejects instances with C(n, k) > 10^7 column subsets.
bool is_mds(const LinearCode& code);

bool is_subcode(const LinearCode& inner, const LinearCode& outer);
bool trivial_intersection(const LinearCode& a, const LinearCode& b);

}  // namespace eewt
