#pragma once

#include <stdexcept>
#include <string>

namespace eewt {

// Base class for every error the library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define EEWT_ERROR_TYPE(name)                                       \
    struct name : Error {                                           \
        explicit name(const std::string& what) : Error(what) {}    \
    }

// galois
EEWT_ERROR_TYPE(ReducibleModulus);
EEWT_ERROR_TYPE(UnsupportedSize);
EEWT_ERROR_TYPE(DivisionByZero);
EEWT_ERROR_TYPE(FieldMismatch);

// codes
EEWT_ERROR_TYPE(DuplicatePoints);
EEWT_ERROR_TYPE(ZeroPointWithShift);
EEWT_ERROR_TYPE(InvalidDimension);
EEWT_ERROR_TYPE(RankDeficient);
EEWT_ERROR_TYPE(ExhaustiveTooLarge);

// wiretap
EEWT_ERROR_TYPE(CapacityViolation);
EEWT_ERROR_TYPE(IntersectionNotTrivial);
EEWT_ERROR_TYPE(BadDimensions);
EEWT_ERROR_TYPE(InvalidParams);
EEWT_ERROR_TYPE(LengthMismatch);
EEWT_ERROR_TYPE(Inconsistent);

// analysis
EEWT_ERROR_TYPE(TooLargeToEnumerate);
EEWT_ERROR_TYPE(NonUniformPosterior);

// storage
EEWT_ERROR_TYPE(UnsupportedField);
EEWT_ERROR_TYPE(HeaderMismatch);
EEWT_ERROR_TYPE(CorruptShare);

// text formats
EEWT_ERROR_TYPE(ParseError);

#undef EEWT_ERROR_TYPE

// Observation admits several secrets; carries the equivocation gap
// dim(D restricted) - dim(C* restricted).
struct AmbiguousSecret : Error {
    int gap;
    explicit AmbiguousSecret(int gap_)
        : Error("multiple secrets are consistent with the observation "
                "(equivocation gap " + std::to_string(gap_) + ")"),
          gap(gap_) {}
};

// Fewer than nu distinct nodes available for reconstruction.
struct InsufficientShares : Error {
    int missing;
    explicit InsufficientShares(int missing_)
        : Error("need " + std::to_string(missing_) + " more share" +
                (missing_ == 1 ? "" : "s") + " to reconstruct"),
          missing(missing_) {}
};

}  // namespace eewt
