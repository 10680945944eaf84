// eewt: nested coset coding on the erasure-erasure wiretap channel.
// Encode a k-symbol secret into n symbols so that any nu of them recover it
// while any mu of them reveal nothing.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eewt/analysis.hpp"
#include "eewt/channel.hpp"
#include "eewt/combinatorics.hpp"
#include "eewt/descriptor.hpp"
#include "eewt/storage.hpp"

using namespace eewt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerifyFail = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::uint8_t> slurp_bytes(const std::string& path) {
    std::string s = slurp(path);
    return {s.begin(), s.end()};
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

void spit_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        spit(out_path, text);
}

SchemeDescriptor load_scheme(const std::string& path) {
    return parse_descriptor(slurp(path));
}

VerifyMode parse_mode(const std::string& mode, std::uint64_t seed) {
    if (mode == "exhaustive") return VerifyMode::make_exhaustive(seed);
    if (mode.rfind("sampled:", 0) == 0) {
        std::uint64_t trials = 0;
        try {
            trials = std::stoull(mode.substr(8));
        } catch (const std::exception&) {
            throw InvalidParams("bad trial count in --mode " + mode);
        }
        return VerifyMode::make_sampled(seed, trials);
    }
    throw InvalidParams("--mode must be 'exhaustive' or 'sampled:N'");
}

// Smallest binary field that fits: the eval form needs n distinct nonzero
// points and the cyclic form has length exactly q-1, so both want the first
// m with 2^m - 1 >= n.
FieldPtr pick_field(const std::string& field_spec, int n) {
    if (!field_spec.empty()) return parse_field_spec(field_spec);
    for (int m = 1; m <= 16; ++m)
        if ((1 << m) - 1 >= n) return default_binary_field(m);
    throw InvalidParams("no supported binary field fits n = " + std::to_string(n));
}

struct ConstructArgs {
    std::string field_spec;
    std::string construction;
    int n = 0;
    int nu = 0;
    int mu = 0;
    int k = -1;  // default nu - mu
    std::string out;
};

int run_construct(const ConstructArgs& a) {
    if (a.mu > a.nu) throw InvalidParams("mu > nu");
    if (a.nu > a.n) throw InvalidParams("nu > n");
    int k = a.k < 0 ? a.nu - a.mu : a.k;
    FieldPtr field = pick_field(a.field_spec, a.n);
    SchemeDescriptor d = [&] {
        if (a.construction == "eval") return build_eval_scheme(field, a.n, a.nu, a.mu, k);
        int cyc_n = static_cast<int>(field->size()) - 1;
        if (a.n != cyc_n)
            throw InvalidParams("cyclic construction over " + field_spec_string(*field) +
                                " has length " + std::to_string(cyc_n) + ", not " +
                                std::to_string(a.n));
        return build_cyclic_scheme(field, a.nu, a.mu, k);
    }();
    emit(a.out, emit_descriptor(d));
    return kExitOk;
}

struct IoArgs {
    std::string scheme;
    std::string in;
    std::string out;
    std::uint64_t seed = 0;
};

int run_encode(const IoArgs& a) {
    SchemeDescriptor d = load_scheme(a.scheme);
    auto secret = symbols_from_hex(d.scheme.field(), slurp(a.in));
    auto enc = d.scheme.encode_random(secret, a.seed);
    std::cerr << "randomizer: " << symbols_to_hex(d.scheme.field(), enc.randomizer) << "\n";
    emit(a.out, symbols_to_hex(d.scheme.field(), enc.codeword) + "\n");
    return kExitOk;
}

int run_decode(const IoArgs& a) {
    SchemeDescriptor d = load_scheme(a.scheme);
    Observation obs = Observation::parse(d.scheme.field(), slurp(a.in));
    auto secret = d.scheme.decode(obs);
    emit(a.out, symbols_to_hex(d.scheme.field(), secret) + "\n");
    return kExitOk;
}

int run_simulate(const IoArgs& a) {
    SchemeDescriptor d = load_scheme(a.scheme);
    const NestedScheme& s = d.scheme;
    auto secret = symbols_from_hex(s.field(), slurp(a.in));

    // one seed drives three independent streams
    auto enc = s.encode_random(secret, a.seed);
    ErasureChannel main_channel({s.n(), s.nu(), a.seed + 1});
    ErasureChannel wiretap({s.n(), s.mu(), a.seed + 2});

    Observation bob = main_channel.transmit(enc.codeword);
    Observation eve = wiretap.transmit(enc.codeword);

    std::ostringstream os;
    os << "scheme: n=" << s.n() << " k=" << s.k() << " kstar=" << s.kstar()
       << " nu=" << s.nu() << " mu=" << s.mu() << "\n";
    os << "secret: " << symbols_to_hex(s.field(), secret) << "\n";
    os << "randomizer: " << symbols_to_hex(s.field(), enc.randomizer) << "\n";
    os << "codeword: " << symbols_to_hex(s.field(), enc.codeword) << "\n";
    os << "main_revealed: " << bob.revealed.to_string() << "\n";
    auto decoded = s.decode(bob);
    os << "decoded: " << symbols_to_hex(s.field(), decoded) << "\n";
    os << "decode_ok: " << (decoded == secret ? "yes" : "NO") << "\n";
    os << "wiretap_revealed: " << eve.revealed.to_string() << "\n";
    os << "wiretap_observation:\n" << eve.to_text(s.field());
    auto eq = equivocation_formula(s, eve.revealed);
    os << "wiretap_equivocation: " << eq.dims << "\n";
    os << "wiretap_full_secrecy: " << (eq.dims == s.k() ? "yes" : "NO") << "\n";
    emit(a.out, os.str());
    return decoded == secret ? kExitOk : kExitVerifyFail;
}

struct VerifyArgs {
    std::string scheme;
    std::string mode = "exhaustive";
    std::string check = "both";
    bool bruteforce = false;
    std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& a) {
    SchemeDescriptor d = load_scheme(a.scheme);
    VerifyMode mode = parse_mode(a.mode, a.seed);

    std::vector<VerificationReport> reports;
    if (a.check == "both" || a.check == "security")
        reports.push_back(verify_security(d.scheme, mode));
    if (a.check == "both" || a.check == "reliability")
        reports.push_back(verify_reliability(d.scheme, mode));
    if (reports.empty()) throw InvalidParams("--check must be security, reliability or both");

    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;

    std::uint64_t oracle_checked = 0;
    std::string oracle_note;
    if (a.bruteforce) {
        if (!mode.exhaustive)
            throw InvalidParams("--bruteforce requires --mode exhaustive");
        for_each_subset(d.scheme.n(), d.scheme.mu(), [&](const std::vector<int>& idx) {
            IndexSet w{std::vector<int>(idx)};
            auto fm = equivocation_formula(d.scheme, w);
            auto bf = equivocation_bruteforce(d.scheme, w);
            ++oracle_checked;
            if (fm.dims != bf.dims && oracle_note.empty()) {
                oracle_note = "oracle disagrees on W=" + w.to_string();
                pass = false;
            }
        });
    }

    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& r : reports) {
        std::cout << "--- " << r.check << " ---\n" << r.to_text();
    }
    if (a.bruteforce) {
        std::cout << "--- bruteforce crosscheck ---\n";
        std::cout << "subsets: " << oracle_checked << "\n";
        std::cout << (oracle_note.empty() ? "oracle_agrees: yes" : oracle_note) << "\n";
    }
    return pass ? kExitOk : kExitVerifyFail;
}

struct DlpArgs {
    std::string scheme;
    int i = 0;
    std::string which = "d";
    std::string mode = "exhaustive";
    std::uint64_t seed = 0;
};

int run_dlp(const DlpArgs& a) {
    SchemeDescriptor d = load_scheme(a.scheme);
    const LinearCode* code = nullptr;
    if (a.which == "c") code = &d.scheme.message_code();
    else if (a.which == "cstar") code = &d.scheme.randomizer_code();
    else if (a.which == "d") code = &d.scheme.sum_code();
    else throw InvalidParams("--code must be c, cstar or d");

    VerifyMode mode = parse_mode(a.mode, a.seed);
    if (mode.exhaustive) {
        std::cout << dlp(*code, a.i) << "\n";
    } else {
        int bound = dlp_sampled(*code, a.i, mode.trials, mode.seed);
        std::cout << ">=" << bound << " (sampled, seed=" << mode.seed
                  << ", trials=" << mode.trials << ")\n";
    }
    return kExitOk;
}

struct LeakageArgs {
    std::string scheme;
    std::string mode = "exhaustive";
    std::string out;
    std::uint64_t seed = 0;
};

int run_leakage(const LeakageArgs& a) {
    SchemeDescriptor d = load_scheme(a.scheme);
    auto prof = leakage_profile(d.scheme, parse_mode(a.mode, a.seed));
    emit(a.out, prof.to_csv());
    return kExitOk;
}

struct SharesArgs {
    std::string scheme;
    std::string in;
    std::string out;
    std::uint64_t seed = 0;
    std::vector<std::string> share_paths;
};

int run_shares_split(const SharesArgs& a) {
    SchemeDescriptor d = load_scheme(a.scheme);
    auto files = split(d.scheme, slurp_bytes(a.in), a.seed);
    std::string base = a.out.empty() ? a.in : a.out;
    for (const auto& f : files) {
        std::string path = share_file_name(base, f.header.node_index);
        spit_bytes(path, f.to_bytes());
        std::cout << path << "\n";
    }
    return kExitOk;
}

int run_shares_join(const SharesArgs& a) {
    SchemeDescriptor d = load_scheme(a.scheme);
    std::vector<ShareFile> files;
    for (const auto& p : a.share_paths) files.push_back(ShareFile::from_bytes(slurp_bytes(p)));
    auto msg = reconstruct(d.scheme, files);
    if (a.out.empty()) {
        std::cout.write(reinterpret_cast<const char*>(msg.data()),
                        static_cast<std::streamsize>(msg.size()));
    } else {
        spit_bytes(a.out, msg);
    }
    return kExitOk;
}

int run_shares_inspect(const SharesArgs& a) {
    for (const auto& p : a.share_paths) {
        ShareFile f = ShareFile::from_bytes(slurp_bytes(p));
        std::cout << "file: " << p << "\n";
        std::cout << "magic: EEWT v1\n";
        std::cout << "field: gf(2^" << f.header.m << ",modulus=0x" << std::uppercase << std::hex
                  << f.header.modulus_bits << std::dec << ")\n";
        std::cout << "n: " << f.header.n << "\n";
        std::cout << "k: " << f.header.k << "\n";
        std::cout << "kstar: " << f.header.kstar << "\n";
        std::cout << "nu: " << f.header.nu << "\n";
        std::cout << "mu: " << f.header.mu << "\n";
        std::cout << "node_index: " << f.header.node_index << "\n";
        std::cout << "block_count: " << f.header.block_count << "\n";
    }
    return kExitOk;
}

// adversary: what do these shares leak?
int run_shares_adversary(const SharesArgs& a) {
    SchemeDescriptor d = load_scheme(a.scheme);
    std::vector<ShareFile> files;
    for (const auto& p : a.share_paths) files.push_back(ShareFile::from_bytes(slurp_bytes(p)));
    auto rep = adversary_view(d.scheme, files);
    std::cout << rep.to_text();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nested coset coding for the erasure-erasure wiretap channel"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a scheme descriptor");
    construct->add_option("--field", ca.field_spec, "field spec, e.g. gf(2^8,modulus=0x11D)");
    construct->add_option("--construction", ca.construction, "eval or cyclic")
        ->required()
        ->check(CLI::IsMember({"eval", "cyclic"}));
    construct->add_option("--n", ca.n, "code length")->required();
    construct->add_option("--nu", ca.nu, "symbols the receiver gets")->required();
    construct->add_option("--mu", ca.mu, "symbols the wiretapper gets")->required();
    construct->add_option("--k", ca.k, "secret length (default nu - mu)");
    construct->add_option("--out", ca.out, "descriptor output path (default stdout)");

    IoArgs ea;
    auto* encode = app.add_subcommand("encode", "encode a secret into a codeword");
    encode->add_option("--scheme", ea.scheme, "scheme descriptor path")->required();
    encode->add_option("--in", ea.in, "secret input: one line of k hex symbols")->required();
    encode->add_option("--out", ea.out, "codeword output path (default stdout)");
    encode->add_option("--seed", ea.seed, "randomizer seed")->envname("EEWT_SEED");

    IoArgs da;
    auto* decode = app.add_subcommand("decode", "recover the secret from an observation");
    decode->add_option("--scheme", da.scheme, "scheme descriptor path")->required();
    decode->add_option("--in", da.in, "observation input: index:HEX lines")->required();
    decode->add_option("--out", da.out, "secret output path (default stdout)");

    IoArgs sa;
    auto* simulate = app.add_subcommand("simulate", "encode, erase, decode, wiretap");
    simulate->add_option("--scheme", sa.scheme, "scheme descriptor path")->required();
    simulate->add_option("--in", sa.in, "secret input: one line of k hex symbols")->required();
    simulate->add_option("--out", sa.out, "report output path (default stdout)");
    simulate->add_option("--seed", sa.seed, "seed for randomizer and channels")
        ->envname("EEWT_SEED");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check perfect secrecy and reliability");
    verify->add_option("--scheme", va.scheme, "scheme descriptor path")->required();
    verify->add_option("--mode", va.mode, "exhaustive or sampled:N");
    verify->add_option("--check", va.check, "security, reliability or both")
        ->check(CLI::IsMember({"security", "reliability", "both"}));
    verify->add_flag("--bruteforce", va.bruteforce,
                     "cross-check each wiretap set against the enumeration oracle");
    verify->add_option("--seed", va.seed, "seed for sampling and round-trip draws")
        ->envname("EEWT_SEED");

    DlpArgs dlpa;
    auto* dlpc = app.add_subcommand("dlp", "dimension/length profile k_i of a scheme code");
    dlpc->add_option("--scheme", dlpa.scheme, "scheme descriptor path")->required();
    dlpc->add_option("--i", dlpa.i, "support size")->required();
    dlpc->add_option("--code", dlpa.which, "c, cstar or d (default d)");
    dlpc->add_option("--mode", dlpa.mode, "exhaustive or sampled:N");
    dlpc->add_option("--seed", dlpa.seed, "sampling seed")->envname("EEWT_SEED");

    LeakageArgs la;
    auto* leakage = app.add_subcommand("leakage", "leakage vs revealed-symbol-count CSV");
    leakage->add_option("--scheme", la.scheme, "scheme descriptor path")->required();
    leakage->add_option("--mode", la.mode, "exhaustive or sampled:N");
    leakage->add_option("--out", la.out, "CSV output path (default stdout)");
    leakage->add_option("--seed", la.seed, "sampling seed")->envname("EEWT_SEED");

    SharesArgs sha;
    auto* shares = app.add_subcommand("shares", "split a file into shares and back");
    shares->require_subcommand(1);
    auto* ssplit = shares->add_subcommand("split", "write one share file per node");
    ssplit->add_option("--scheme", sha.scheme, "scheme descriptor path")->required();
    ssplit->add_option("--in", sha.in, "file to protect")->required();
    ssplit->add_option("--out", sha.out, "output basename (default: input path)");
    ssplit->add_option("--seed", sha.seed, "randomizer seed")->envname("EEWT_SEED");
    auto* sjoin = shares->add_subcommand("join", "reconstruct from >= nu shares");
    sjoin->add_option("--scheme", sha.scheme, "scheme descriptor path")->required();
    sjoin->add_option("--out", sha.out, "reconstructed output path (default stdout)");
    sjoin->add_option("shares", sha.share_paths, "share file paths")->required();
    auto* sinspect = shares->add_subcommand("inspect", "print parsed share headers");
    sinspect->add_option("shares", sha.share_paths, "share file paths")->required();
    auto* sadv = shares->add_subcommand("adversary", "equivocation given these shares");
    sadv->add_option("--scheme", sha.scheme, "scheme descriptor path")->required();
    sadv->add_option("shares", sha.share_paths, "share file paths")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct) return run_construct(ca);
        if (*encode) return run_encode(ea);
        if (*decode) return run_decode(da);
        if (*simulate) return run_simulate(sa);
        if (*verify) return run_verify(va);
        if (*dlpc) return run_dlp(dlpa);
        if (*leakage) return run_leakage(la);
        if (*shares) {
            if (*ssplit) return run_shares_split(sha);
            if (*sjoin) return run_shares_join(sha);
            if (*sinspect) return run_shares_inspect(sha);
            if (*sadv) return run_shares_adversary(sha);
        }
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ExhaustiveTooLarge& e) {
        std::cerr << "error: " << e.what() << " (try --mode sampled:1000)\n";
        return kExitUsage;
    } catch (const CapacityViolation& e) {
        // bad parameters on the command line for construct; bad data otherwise
        std::cerr << "error: " << e.what() << "\n";
        return *construct ? kExitUsage : kExitData;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
