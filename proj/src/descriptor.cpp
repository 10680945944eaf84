#include "eewt/descriptor.hpp"

#include <sstream>

namespace eewt {

namespace {

// The scheme member has no default constructor, so the builders assemble
// everything first and aggregate at the end.

LinearCode first_rows(const LinearCode& code, int count) {
    std::vector<std::vector<Symbol>> rows;
    for (int i = 0; i < count; ++i) {
        auto r = code.generator().row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    return LinearCode(Matrix::from_rows(code.field_ptr(), rows));
}

}  // namespace

SchemeDescriptor build_eval_scheme(FieldPtr field, int n, int nu, int mu, int k) {
    if (n > static_cast<int>(field->size()) - 1)
        throw InvalidParams("eval construction needs n <= q-1; pick a larger field");
    if (k < 0 || mu < 0 || nu < mu || k > nu - mu)
        throw CapacityViolation("need 0 <= k <= nu - mu");
    std::vector<Symbol> points = alpha_powers(*field, n);
    LinearCode c = rs_eval_code(field, points, 0, k);
    LinearCode cstar = rs_eval_code(field, points, k, mu);
    return SchemeDescriptor{"eval", NestedScheme(nu, mu, std::move(c), std::move(cstar)),
                            std::move(points), 0, k, std::nullopt, std::nullopt};
}

SchemeDescriptor build_cyclic_scheme(FieldPtr field, int nu, int mu, int k) {
    if (k < 0 || mu < 0 || nu < mu || k > nu - mu)
        throw CapacityViolation("need 0 <= k <= nu - mu");
    CyclicRsCode d = rs_cyclic_code(field, k + mu);
    CyclicRsCode cstar = rs_cyclic_code(field, mu);
    // C = the k low shifts of g_D: inside D, disjoint from C* because every
    // nonzero element has degree below deg g_C*.
    LinearCode c = first_rows(d.code, k);
    return SchemeDescriptor{"cyclic",
                            NestedScheme(nu, mu, std::move(c), std::move(cstar.code)),
                            {},
                            0,
                            0,
                            std::move(d.gpoly),
                            std::move(cstar.gpoly)};
}

SchemeDescriptor custom_scheme(int nu, int mu, LinearCode message_code,
                               LinearCode randomizer_code) {
    return SchemeDescriptor{
        "custom", NestedScheme(nu, mu, std::move(message_code), std::move(randomizer_code)),
        {}, 0, 0, std::nullopt, std::nullopt};
}

std::string emit_descriptor(const SchemeDescriptor& d) {
    const NestedScheme& s = d.scheme;
    const Field& f = s.field();
    std::ostringstream os;
    os << "eewt-scheme: 1\n";
    os << "field: " << field_spec_string(f) << "\n";
    os << "construction: " << d.construction << "\n";
    os << "n: " << s.n() << "\n";
    os << "nu: " << s.nu() << "\n";
    os << "mu: " << s.mu() << "\n";
    os << "k: " << s.k() << "\n";
    os << "kstar: " << s.kstar() << "\n";
    os << "capacity: " << capacity(s.n(), s.nu(), s.mu()).str() << "\n";
    if (d.construction == "eval") {
        os << "d0_c: " << d.d0_c << "\n";
        os << "d0_cstar: " << d.d0_cstar << "\n";
        os << "points: " << symbols_to_hex(f, d.points) << "\n";
    }
    if (d.gpoly_d)
        os << "gpoly_d: " << symbols_to_hex(f, d.gpoly_d->coeffs()) << "\n";
    if (d.gpoly_cstar)
        os << "gpoly_cstar: " << symbols_to_hex(f, d.gpoly_cstar->coeffs()) << "\n";
    os << "generator_c:\n" << matrix_to_hex(s.message_code().generator());
    os << "generator_cstar:\n" << matrix_to_hex(s.randomizer_code().generator());
    return os.str();
}

SchemeDescriptor parse_descriptor(const std::string& text) {
    std::istringstream is(text);
    std::string line;

    auto next_line = [&](std::string& out) {
        while (std::getline(is, line)) {
            // strip trailing CR from files written on other platforms
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            out = line;
            return true;
        }
        return false;
    };
    auto expect_key = [&](const std::string& key) {
        std::string l;
        if (!next_line(l)) throw ParseError("descriptor ended early, expected '" + key + "'");
        if (l.rfind(key + ":", 0) != 0)
            throw ParseError("expected '" + key + ":' but found '" + l + "'");
        std::string v = l.substr(key.size() + 1);
        size_t b = v.find_first_not_of(" \t");
        return b == std::string::npos ? std::string() : v.substr(b);
    };
    auto to_int = [](const std::string& v, const std::string& key) {
        try {
            return std::stoi(v);
        } catch (const std::exception&) {
            throw ParseError("bad integer for '" + key + "'");
        }
    };

    if (expect_key("eewt-scheme") != "1") throw ParseError("unsupported descriptor version");
    FieldPtr field = parse_field_spec(expect_key("field"));
    std::string construction = expect_key("construction");
    if (construction != "eval" && construction != "cyclic" && construction != "custom")
        throw ParseError("unknown construction '" + construction + "'");
    int n = to_int(expect_key("n"), "n");
    int nu = to_int(expect_key("nu"), "nu");
    int mu = to_int(expect_key("mu"), "mu");
    int k = to_int(expect_key("k"), "k");
    int kstar = to_int(expect_key("kstar"), "kstar");
    expect_key("capacity");  // informative; recomputed from n, nu, mu

    std::vector<Symbol> points;
    int d0_c = 0, d0_cstar = 0;
    std::optional<Polynomial> gpoly_d, gpoly_cstar;
    std::string l;
    if (!next_line(l)) throw ParseError("descriptor ended before the generator matrices");
    if (l.rfind("d0_c:", 0) == 0) {
        d0_c = to_int(l.substr(5), "d0_c");
        if (!next_line(l)) throw ParseError("descriptor ended before the generator matrices");
    }
    if (l.rfind("d0_cstar:", 0) == 0) {
        d0_cstar = to_int(l.substr(9), "d0_cstar");
        if (!next_line(l)) throw ParseError("descriptor ended before the generator matrices");
    }
    if (l.rfind("points:", 0) == 0) {
        points = symbols_from_hex(*field, l.substr(7));
        if (!next_line(l)) throw ParseError("descriptor ended before the generator matrices");
    }
    if (l.rfind("gpoly_d:", 0) == 0) {
        gpoly_d = Polynomial(field, symbols_from_hex(*field, l.substr(8)));
        if (!next_line(l)) throw ParseError("descriptor ended before the generator matrices");
    }
    if (l.rfind("gpoly_cstar:", 0) == 0) {
        gpoly_cstar = Polynomial(field, symbols_from_hex(*field, l.substr(12)));
        if (!next_line(l)) throw ParseError("descriptor ended before the generator matrices");
    }

    if (l != "generator_c:") throw ParseError("expected 'generator_c:' but found '" + l + "'");
    std::vector<std::string> c_rows, cstar_rows;
    for (int i = 0; i < k; ++i) {
        if (!next_line(l)) throw ParseError("generator_c has fewer rows than k");
        c_rows.push_back(l);
    }
    if (!next_line(l) || l != "generator_cstar:")
        throw ParseError("expected 'generator_cstar:'");
    for (int i = 0; i < kstar; ++i) {
        if (!next_line(l)) throw ParseError("generator_cstar has fewer rows than kstar");
        cstar_rows.push_back(l);
    }

    Matrix gc = k == 0 ? Matrix(field, 0, n) : matrix_from_hex(field, c_rows);
    Matrix gcstar = kstar == 0 ? Matrix(field, 0, n) : matrix_from_hex(field, cstar_rows);
    if (gc.cols() != n || gcstar.cols() != n)
        throw ParseError("generator row width does not match n");

    // NestedScheme re-validates every invariant, so a tampered descriptor
    // cannot produce a silently different scheme.
    SchemeDescriptor d{construction,
                       NestedScheme(nu, mu, LinearCode(std::move(gc)),
                                    LinearCode(std::move(gcstar))),
                       std::move(points), d0_c, d0_cstar,
                       std::move(gpoly_d), std::move(gpoly_cstar)};
    if (d.scheme.k() != k || d.scheme.kstar() != kstar)
        throw ParseError("descriptor dimensions disagree with the generator matrices");
    return d;
}

}  // namespace eewt
