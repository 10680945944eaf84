#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eewt/wiretap.hpp"

namespace eewt {

// Conditional entropy H(S | observation) in base-q units. Exact values are
// integer dimensions; raw_count carries the number of equally likely
// candidate secrets when it was counted directly.
struct EquivocationValue {
    int dims = 0;
    bool exact = true;
    std::optional<std::uint64_t> raw_count;

    bool operator==(const EquivocationValue& other) const {
        return dims == other.dims && exact == other.exact;
    }
};

// H(S|X_J) = dim(D restricted away from J) - dim(C* restricted away from J).
EquivocationValue equivocation_formula(const NestedScheme& scheme, const IndexSet& j);

// Independent oracle: enumerates every (S, E) pair, bins codewords by their
// restriction to j, and checks the posterior over S is uniform with the same
// support size in every bin. Requires q^(k + k*) <= 2^24.
EquivocationValue equivocation_bruteforce(const NestedScheme& scheme, const IndexSet& j);

// H(S|X_W) = n - |W| - dim(C* restricted away from W) for coset coding with
// a perfect main channel.
EquivocationValue ozarow_equivocation(const LinearCode& randomizer_code, const IndexSet& w);

struct VerifyMode {
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;

    static VerifyMode make_exhaustive(std::uint64_t seed = 0) { return {true, seed, 0}; }
    static VerifyMode make_sampled(std::uint64_t seed, std::uint64_t trials) {
        return {false, seed, trials};
    }
};

struct Violation {
    IndexSet subset;
    int equivocation;
    std::string detail;
};

struct VerificationReport {
    std::string check;  // "security" or "reliability"
    bool pass = true;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::uint64_t subsets_checked = 0;
    int subset_size = 0;
    int expected_equivocation = 0;
    std::vector<Violation> violations;  // sorted by subset, lexicographic

    // First line is PASS or FAIL.
    std::string to_text() const;
};

// Checks H(S|X_W) = k for every |W| = mu (or a seeded sample of them).
// Exhaustive mode requires C(n, mu) <= 10^6.
VerificationReport verify_security(const NestedScheme& scheme, const VerifyMode& mode);

// Checks H(S|X_M) = 0 and a decode round trip of a seeded random (S, E)
// for every |M| = nu (or a seeded sample).
VerificationReport verify_reliability(const NestedScheme& scheme, const VerifyMode& mode);

struct LeakageRow {
    int m = 0;
    int min_equivocation = 0;
    int max_equivocation = 0;
    bool exhaustive = true;
};

struct LeakageProfile {
    int k = 0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<LeakageRow> rows;  // one per m in 0..n

    // Header m,min_equivocation,max_equivocation,min_leaked,max_leaked,exhaustive.
    std::string to_csv() const;
};

// Min/max equivocation over revealed sets of every size; leaked information
// is k minus equivocation. Sampled mode falls back to exhaustive rows
// whenever a size is small enough to enumerate.
LeakageProfile leakage_profile(const NestedScheme& scheme, const VerifyMode& mode);

}  // namespace eewt
