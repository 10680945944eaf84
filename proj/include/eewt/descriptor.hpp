#pragma once

#include <optional>
#include <string>

#include "eewt/wiretap.hpp"

namespace eewt {

// A scheme together with how it was built. The generator matrices in the
// serialized form are authoritative; construction metadata is informative.
struct SchemeDescriptor {
    std::string construction;  // "eval" | "cyclic" | "custom"
    NestedScheme scheme;
    std::vector<Symbol> points;              // eval: evaluation points, in order
    int d0_c = 0;                            // eval: degree shift of C
    int d0_cstar = 0;                        // eval: degree shift of C*
    std::optional<Polynomial> gpoly_d;       // cyclic: generator polynomial of D
    std::optional<Polynomial> gpoly_cstar;   // cyclic: generator polynomial of C*
};

// Capacity-achieving evaluation construction on the points alpha^0..alpha^(n-1):
// C spans degrees 0..k-1, C* spans degrees k..k+mu-1, D is the (n, k+mu)
// evaluation RS code. Requires n <= q-1.
SchemeDescriptor build_eval_scheme(FieldPtr field, int n, int nu, int mu, int k);

// Cyclic construction of length n = q-1: D and C* are cyclic RS codes of
// dimensions k+mu and mu; C is spanned by the k low shifts of D's generator
// polynomial.
SchemeDescriptor build_cyclic_scheme(FieldPtr field, int nu, int mu, int k);

SchemeDescriptor custom_scheme(int nu, int mu, LinearCode message_code,
                               LinearCode randomizer_code);

std::string emit_descriptor(const SchemeDescriptor& d);
SchemeDescriptor parse_descriptor(const std::string& text);

}  // namespace eewt
