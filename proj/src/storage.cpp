#include "eewt/storage.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eewt {

namespace {

void put_be(std::vector<std::uint8_t>& out, std::uint64_t v, int bytes) {
    for (int i = bytes - 1; i >= 0; --i)
        out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_be(std::span<const std::uint8_t> in, size_t at, int bytes) {
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v = (v << 8) | in[at + static_cast<size_t>(i)];
    return v;
}

// Padded byte stream -> m-bit symbols, MSB first; the final symbol is
// zero-filled on the right.
std::vector<Symbol> symbols_from_bytes(std::span<const std::uint8_t> bytes, int m) {
    const size_t total_bits = bytes.size() * 8;
    const size_t nsyms = (total_bits + static_cast<size_t>(m) - 1) / static_cast<size_t>(m);
    std::vector<Symbol> out(nsyms, 0);
    for (size_t s = 0; s < nsyms; ++s) {
        std::uint32_t v = 0;
        for (int b = 0; b < m; ++b) {
            size_t bit = s * static_cast<size_t>(m) + static_cast<size_t>(b);
            int bitval = bit < total_bits ? (bytes[bit / 8] >> (7 - bit % 8)) & 1 : 0;
            v = (v << 1) | static_cast<std::uint32_t>(bitval);
        }
        out[s] = static_cast<Symbol>(v);
    }
    return out;
}

std::vector<std::uint8_t> bytes_from_symbols(std::span<const Symbol> syms, int m) {
    const size_t total_bits = syms.size() * static_cast<size_t>(m);
    std::vector<std::uint8_t> out(total_bits / 8, 0);
    for (size_t bit = 0; bit < out.size() * 8; ++bit) {
        size_t s = bit / static_cast<size_t>(m);
        int b = static_cast<int>(bit % static_cast<size_t>(m));
        int bitval = (syms[s] >> (m - 1 - b)) & 1;
        out[bit / 8] |= static_cast<std::uint8_t>(bitval << (7 - bit % 8));
    }
    return out;
}

ShareHeader header_for(const NestedScheme& scheme, int node_index, std::uint32_t block_count) {
    ShareHeader h;
    h.m = scheme.field().degree();
    h.modulus_bits = scheme.field().modulus_value();
    h.n = scheme.n();
    h.k = scheme.k();
    h.kstar = scheme.kstar();
    h.nu = scheme.nu();
    h.mu = scheme.mu();
    h.node_index = node_index;
    h.block_count = block_count;
    return h;
}

void check_scheme_header(const NestedScheme& scheme, const ShareHeader& h) {
    if (scheme.field().characteristic() != 2)
        throw UnsupportedField("share files are defined over characteristic-2 fields only");
    bool ok = h.m == scheme.field().degree() && h.modulus_bits == scheme.field().modulus_value() &&
              h.n == scheme.n() && h.k == scheme.k() && h.kstar == scheme.kstar() &&
              h.nu == scheme.nu() && h.mu == scheme.mu();
    if (!ok) throw HeaderMismatch("share header does not match the scheme");
}

// Distinct node -> payload, first file wins on duplicates. Also verifies the
// headers agree with each other and with the scheme.
std::map<int, const std::vector<Symbol>*> collect_nodes(const NestedScheme& scheme,
                                                        const std::vector<ShareFile>& files) {
    std::map<int, const std::vector<Symbol>*> nodes;
    for (const auto& f : files) {
        if (!f.header.same_scheme(files.front().header))
            throw HeaderMismatch("share files come from different splits");
        check_scheme_header(scheme, f.header);
        if (f.header.node_index < 0 || f.header.node_index >= scheme.n())
            throw HeaderMismatch("share node index out of range");
        if (f.payload.size() != f.header.block_count)
            throw CorruptShare("payload length differs from the declared block count");
        nodes.emplace(f.header.node_index, &f.payload);
    }
    return nodes;
}

}  // namespace

std::vector<std::uint8_t> ShareFile::to_bytes() const {
    std::vector<std::uint8_t> out;
    out.reserve(kShareHeaderSize + payload.size() * ((static_cast<size_t>(header.m) + 7) / 8));
    for (std::uint8_t b : {0x45, 0x45, 0x57, 0x54}) out.push_back(b);  // "EEWT"
    out.push_back(0x01);
    put_be(out, static_cast<std::uint64_t>(header.m), 1);
    put_be(out, header.modulus_bits, 4);
    put_be(out, static_cast<std::uint64_t>(header.n), 2);
    put_be(out, static_cast<std::uint64_t>(header.k), 2);
    put_be(out, static_cast<std::uint64_t>(header.kstar), 2);
    put_be(out, static_cast<std::uint64_t>(header.nu), 2);
    put_be(out, static_cast<std::uint64_t>(header.mu), 2);
    put_be(out, static_cast<std::uint64_t>(header.node_index), 2);
    put_be(out, header.block_count, 4);
    const int sym_bytes = (header.m + 7) / 8;
    for (Symbol s : payload) put_be(out, s, sym_bytes);
    return out;
}

ShareFile ShareFile::from_bytes(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kShareHeaderSize) throw ParseError("share file shorter than its header");
    if (bytes[0] != 0x45 || bytes[1] != 0x45 || bytes[2] != 0x57 || bytes[3] != 0x54)
        throw ParseError("bad share file magic");
    if (bytes[4] != 0x01) throw ParseError("unsupported share file version");
    ShareFile f;
    f.header.m = static_cast<int>(get_be(bytes, 5, 1));
    f.header.modulus_bits = static_cast<std::uint32_t>(get_be(bytes, 6, 4));
    f.header.n = static_cast<int>(get_be(bytes, 10, 2));
    f.header.k = static_cast<int>(get_be(bytes, 12, 2));
    f.header.kstar = static_cast<int>(get_be(bytes, 14, 2));
    f.header.nu = static_cast<int>(get_be(bytes, 16, 2));
    f.header.mu = static_cast<int>(get_be(bytes, 18, 2));
    f.header.node_index = static_cast<int>(get_be(bytes, 20, 2));
    f.header.block_count = static_cast<std::uint32_t>(get_be(bytes, 22, 4));
    if (f.header.m < 1 || f.header.m > 16) throw ParseError("share header degree out of range");
    const size_t sym_bytes = (static_cast<size_t>(f.header.m) + 7) / 8;
    if (bytes.size() != kShareHeaderSize + sym_bytes * f.header.block_count)
        throw ParseError("share payload length does not match block count");
    const std::uint64_t q = 1ull << f.header.m;
    f.payload.reserve(f.header.block_count);
    for (std::uint32_t i = 0; i < f.header.block_count; ++i) {
        std::uint64_t v = get_be(bytes, kShareHeaderSize + sym_bytes * i,
                                 static_cast<int>(sym_bytes));
        if (v >= q) throw ParseError("share payload symbol outside GF(2^m)");
        f.payload.push_back(static_cast<Symbol>(v));
    }
    return f;
}

std::vector<ShareFile> split(const NestedScheme& scheme, std::span<const std::uint8_t> message,
                             std::uint64_t seed) {
    const Field& f = scheme.field();
    if (f.characteristic() != 2 || f.degree() > 16)
        throw UnsupportedField("split requires GF(2^m) with m <= 16");
    if (scheme.k() == 0) throw UnsupportedField("a scheme with k = 0 cannot carry data");

    std::vector<std::uint8_t> padded;
    padded.reserve(8 + message.size());
    put_be(padded, message.size(), 8);
    padded.insert(padded.end(), message.begin(), message.end());

    std::vector<Symbol> syms = symbols_from_bytes(padded, f.degree());
    while (syms.size() % static_cast<size_t>(scheme.k()) != 0) syms.push_back(0);
    const std::uint32_t block_count = static_cast<std::uint32_t>(syms.size()) /
                                      static_cast<std::uint32_t>(scheme.k());

    std::vector<ShareFile> files(static_cast<size_t>(scheme.n()));
    for (int i = 0; i < scheme.n(); ++i) {
        files[static_cast<size_t>(i)].header = header_for(scheme, i, block_count);
        files[static_cast<size_t>(i)].payload.reserve(block_count);
    }

    Rng rng(seed);
    for (std::uint32_t b = 0; b < block_count; ++b) {
        std::span<const Symbol> s{syms.data() + static_cast<size_t>(b) * scheme.k(),
                                  static_cast<size_t>(scheme.k())};
        auto enc = scheme.encode_random(s, rng);
        for (int i = 0; i < scheme.n(); ++i)
            files[static_cast<size_t>(i)].payload.push_back(enc.codeword[static_cast<size_t>(i)]);
    }
    return files;
}

std::vector<std::uint8_t> reconstruct(const NestedScheme& scheme,
                                      const std::vector<ShareFile>& files) {
    if (files.empty()) throw InsufficientShares(scheme.nu());
    auto nodes = collect_nodes(scheme, files);
    if (static_cast<int>(nodes.size()) < scheme.nu())
        throw InsufficientShares(scheme.nu() - static_cast<int>(nodes.size()));

    std::vector<int> idx;
    for (const auto& [node, payload] : nodes) idx.push_back(node);
    IndexSet revealed{std::move(idx)};

    const std::uint32_t block_count = files.front().header.block_count;
    std::vector<Symbol> secret_syms;
    secret_syms.reserve(static_cast<size_t>(block_count) * scheme.k());
    for (std::uint32_t b = 0; b < block_count; ++b) {
        std::vector<Symbol> vals;
        vals.reserve(nodes.size());
        for (const auto& [node, payload] : nodes) vals.push_back((*payload)[b]);
        try {
            auto s = scheme.decode(Observation(revealed, std::move(vals)));
            secret_syms.insert(secret_syms.end(), s.begin(), s.end());
        } catch (const Inconsistent&) {
            throw CorruptShare("block " + std::to_string(b) +
                               " is not the restriction of any codeword");
        }
    }

    std::vector<std::uint8_t> bytes = bytes_from_symbols(secret_syms, scheme.field().degree());
    if (bytes.size() < 8) throw CorruptShare("decoded stream is shorter than the length prefix");
    std::uint64_t len = get_be(bytes, 0, 8);
    if (len > bytes.size() - 8)
        throw CorruptShare("declared message length exceeds the decoded stream");
    return {bytes.begin() + 8, bytes.begin() + 8 + static_cast<long>(len)};
}

std::string AdversaryReport::to_text() const {
    std::ostringstream os;
    os << "nodes: " << nodes.to_string() << "\n";
    os << "blocks: " << block_count << "\n";
    os << "secret_symbols_per_block: " << k << "\n";
    os << "equivocation_per_block: " << per_block.dims << "\n";
    if (over_mu) os << "note: more nodes than the scheme's mu\n";
    os << (full_secrecy ? "full_secrecy: yes" : "full_secrecy: NO (leaks " +
                                                    std::to_string(k - per_block.dims) +
                                                    " symbols per block)")
       << "\n";
    return os.str();
}

AdversaryReport adversary_view(const NestedScheme& scheme, const std::vector<ShareFile>& files) {
    AdversaryReport rep;
    rep.k = scheme.k();
    if (!files.empty()) {
        auto nodes = collect_nodes(scheme, files);
        std::vector<int> idx;
        for (const auto& [node, payload] : nodes) idx.push_back(node);
        rep.nodes = IndexSet{std::move(idx)};
        rep.block_count = files.front().header.block_count;
    }
    rep.per_block = equivocation_formula(scheme, rep.nodes);
    rep.full_secrecy = rep.per_block.dims == scheme.k();
    rep.over_mu = rep.nodes.size() > scheme.mu();
    return rep;
}

std::string share_file_name(const std::string& basename, int node_index) {
    return basename + ".share" + std::to_string(node_index);
}

}  // namespace eewt
