#include "eewt/analysis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "eewt/combinatorics.hpp"

namespace eewt {

namespace {

constexpr std::uint64_t kExhaustiveSubsetLimit = 1'000'000;
constexpr std::uint64_t kEnumerationLimit = 1u << 24;

std::optional<std::uint64_t> pow_u64(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
            return std::nullopt;
        r *= base;
    }
    return r;
}

EquivocationValue make_exact(const Field& f, int dims) {
    EquivocationValue v;
    v.dims = dims;
    v.exact = true;
    v.raw_count = pow_u64(f.size(), dims);
    return v;
}

IndexSet random_subset(Rng& rng, int n, int r) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (int i = 0; i < r; ++i)
        std::swap(perm[static_cast<size_t>(i)],
                  perm[static_cast<size_t>(i) + rng.below(static_cast<std::uint32_t>(n - i))]);
    return IndexSet(std::vector<int>(perm.begin(), perm.begin() + r));
}

// Runs fn on every size-r subset (exhaustive) or `trials` sampled ones.
template <typename Fn>
void sweep_subsets(int n, int r, const VerifyMode& mode, Fn&& fn) {
    if (!mode.exhaustive && mode.trials == 0)
        throw InvalidParams("sampled mode needs at least one trial");
    if (mode.exhaustive) {
        for_each_subset(n, r, [&](const std::vector<int>& idx) {
            fn(IndexSet(std::vector<int>(idx)));
        });
    } else {
        Rng rng(mode.seed);
        for (std::uint64_t t = 0; t < mode.trials; ++t) fn(random_subset(rng, n, r));
    }
}

void sort_violations(std::vector<Violation>& v) {
    std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
        return a.subset.indices() < b.subset.indices();
    });
    v.erase(std::unique(v.begin(), v.end(),
                        [](const Violation& a, const Violation& b) {
                            return a.subset == b.subset;
                        }),
            v.end());
}

}  // namespace

EquivocationValue equivocation_formula(const NestedScheme& scheme, const IndexSet& j) {
    int dims = scheme.sum_code().shortened_dim(j) - scheme.randomizer_code().shortened_dim(j);
    return make_exact(scheme.field(), dims);
}

EquivocationValue equivocation_bruteforce(const NestedScheme& scheme, const IndexSet& j) {
    const Field& f = scheme.field();
    const int k = scheme.k();
    const int total = k + scheme.kstar();
    auto pairs = pow_u64(f.size(), total);
    if (!pairs || *pairs > kEnumerationLimit)
        throw TooLargeToEnumerate("q^(k+k*) exceeds the enumeration bound 2^24");

    Matrix restricted = scheme.stacked_generator().select_columns(j);

    // bins: restriction value -> (packed secret -> multiplicity)
    std::map<std::vector<Symbol>, std::map<std::uint64_t, std::uint64_t>> bins;
    std::vector<Symbol> se(static_cast<size_t>(total), 0);
    for (std::uint64_t idx = 0;; ++idx) {
        std::uint64_t packed_s = 0;
        for (int i = k - 1; i >= 0; --i)
            packed_s = packed_s * f.size() + se[static_cast<size_t>(i)];
        bins[vec_mat_mul(se, restricted)][packed_s] += 1;

        if (idx + 1 == *pairs) break;
        // odometer increment over F^(k+k*)
        for (int pos = 0;; ++pos) {
            if (++se[static_cast<size_t>(pos)] < f.size()) break;
            se[static_cast<size_t>(pos)] = 0;
        }
    }

    std::optional<std::uint64_t> support;
    for (const auto& [obs, posterior] : bins) {
        std::uint64_t mult = posterior.begin()->second;
        for (const auto& [secret, count] : posterior)
            if (count != mult)
                throw NonUniformPosterior("posterior over secrets is not uniform within a bin");
        if (support && *support != posterior.size())
            throw NonUniformPosterior("candidate-secret count differs between observed values");
        support = posterior.size();
    }

    EquivocationValue v;
    v.raw_count = support;
    std::uint64_t q = f.size();
    std::uint64_t acc = 1;
    int dims = 0;
    while (acc < *support) {
        acc *= q;
        ++dims;
    }
    v.dims = dims;
    v.exact = (acc == *support);
    if (!v.exact) v.dims = dims > 0 ? dims - 1 : 0;  // floor(log_q support)
    return v;
}

EquivocationValue ozarow_equivocation(const LinearCode& randomizer_code, const IndexSet& w) {
    int dims = randomizer_code.n() - w.size() - randomizer_code.shortened_dim(w);
    return make_exact(randomizer_code.field(), dims);
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << "\n";
    os << "check: " << check << "\n";
    os << "mode: " << (exhaustive ? "exhaustive" : "sampled") << "\n";
    if (!exhaustive) os << "seed: " << seed << "\ntrials: " << trials << "\n";
    os << "subset_size: " << subset_size << "\n";
    os << "subsets_checked: " << subsets_checked << "\n";
    os << "expected_equivocation: " << expected_equivocation << "\n";
    os << "violations: " << violations.size() << "\n";
    for (const auto& v : violations) {
        os << "violation: " << v.subset.to_string() << " equivocation=" << v.equivocation;
        if (!v.detail.empty()) os << " " << v.detail;
        os << "\n";
    }
    return os.str();
}

VerificationReport verify_security(const NestedScheme& scheme, const VerifyMode& mode) {
    if (mode.exhaustive &&
        binomial(scheme.n(), scheme.mu()) > kExhaustiveSubsetLimit)
        throw ExhaustiveTooLarge("too many wiretap sets to enumerate; use sampled mode");

    VerificationReport rep;
    rep.check = "security";
    rep.exhaustive = mode.exhaustive;
    rep.seed = mode.seed;
    rep.trials = mode.trials;
    rep.subset_size = scheme.mu();
    rep.expected_equivocation = scheme.k();
    sweep_subsets(scheme.n(), scheme.mu(), mode, [&](const IndexSet& w) {
        ++rep.subsets_checked;
        EquivocationValue eq = equivocation_formula(scheme, w);
        if (eq.dims != scheme.k()) rep.violations.push_back({w, eq.dims, ""});
    });
    sort_violations(rep.violations);
    rep.pass = rep.violations.empty();
    return rep;
}

VerificationReport verify_reliability(const NestedScheme& scheme, const VerifyMode& mode) {
    if (mode.exhaustive &&
        binomial(scheme.n(), scheme.nu()) > kExhaustiveSubsetLimit)
        throw ExhaustiveTooLarge("too many main-channel sets to enumerate; use sampled mode");

    VerificationReport rep;
    rep.check = "reliability";
    rep.exhaustive = mode.exhaustive;
    rep.seed = mode.seed;
    rep.trials = mode.trials;
    rep.subset_size = scheme.nu();
    rep.expected_equivocation = 0;

    Rng msg_rng(mode.seed ^ 0x9E3779B97F4A7C15ull);  // distinct stream for (S, E) draws
    sweep_subsets(scheme.n(), scheme.nu(), mode, [&](const IndexSet& m) {
        ++rep.subsets_checked;
        EquivocationValue eq = equivocation_formula(scheme, m);
        if (eq.dims != 0) {
            rep.violations.push_back({m, eq.dims, "equivocation nonzero"});
            return;
        }
        std::vector<Symbol> s(static_cast<size_t>(scheme.k()));
        for (auto& v : s) v = static_cast<Symbol>(msg_rng.below(scheme.field().size()));
        auto enc = scheme.encode_random(s, msg_rng);
        std::vector<Symbol> revealed;
        for (int i : m) revealed.push_back(enc.codeword[static_cast<size_t>(i)]);
        try {
            auto decoded = scheme.decode(Observation(m, std::move(revealed)));
            if (decoded != s)
                rep.violations.push_back({m, eq.dims, "decode returned a different secret"});
        } catch (const Error& e) {
            rep.violations.push_back({m, eq.dims, std::string("decode failed: ") + e.what()});
        }
    });
    sort_violations(rep.violations);
    rep.pass = rep.violations.empty();
    return rep;
}

std::string LeakageProfile::to_csv() const {
    std::ostringstream os;
    os << "m,min_equivocation,max_equivocation,min_leaked,max_leaked,exhaustive\n";
    for (const auto& r : rows)
        os << r.m << "," << r.min_equivocation << "," << r.max_equivocation << ","
           << (k - r.max_equivocation) << "," << (k - r.min_equivocation) << ","
           << (r.exhaustive ? 1 : 0) << "\n";
    return os.str();
}

LeakageProfile leakage_profile(const NestedScheme& scheme, const VerifyMode& mode) {
    if (!mode.exhaustive && mode.trials == 0)
        throw InvalidParams("sampled mode needs at least one trial");
    LeakageProfile prof;
    prof.k = scheme.k();
    prof.seed = mode.seed;
    prof.trials = mode.trials;
    Rng rng(mode.seed);
    for (int m = 0; m <= scheme.n(); ++m) {
        bool enumerable = binomial(scheme.n(), m) <= kExhaustiveSubsetLimit;
        if (mode.exhaustive && !enumerable)
            throw ExhaustiveTooLarge("reveal count " + std::to_string(m) +
                                     " has too many subsets; use sampled mode");
        LeakageRow row;
        row.m = m;
        row.exhaustive = enumerable;
        int lo = scheme.k() + 1, hi = -1;
        auto tally = [&](const IndexSet& j) {
            int eq = equivocation_formula(scheme, j).dims;
            lo = std::min(lo, eq);
            hi = std::max(hi, eq);
        };
        if (enumerable) {
            for_each_subset(scheme.n(), m, [&](const std::vector<int>& idx) {
                tally(IndexSet(std::vector<int>(idx)));
            });
        } else {
            for (std::uint64_t t = 0; t < mode.trials; ++t)
                tally(random_subset(rng, scheme.n(), m));
        }
        row.min_equivocation = lo;
        row.max_equivocation = hi;
        prof.rows.push_back(row);
    }
    return prof;
}

}  // namespace eewt
