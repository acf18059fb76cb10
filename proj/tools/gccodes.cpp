// gccodes: command-line front end for block exploration, code construction,
// F_q-weight enumerators and constant GC-content DNA codebooks.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gccodes/gccodes.hpp"

using json = nlohmann::ordered_json;
using namespace gccodes;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;
constexpr int kExitGuard = 3;

struct Common {
    std::uint32_t n = 0;
    std::uint64_t q = 2;
    unsigned r = 2;
    std::string block;
    std::string guard;
    unsigned threads = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_block) {
    cmd->add_option("-n", c.n, "code length")->required();
    cmd->add_option("-q", c.q, "base field size (prime power)")->capture_default_str();
    cmd->add_option("-r", c.r, "extension degree")->capture_default_str();
    if (with_block) cmd->add_option("-B,--block", c.block, "block: comma separated residues, 'qr', or 'none'")->required();
    cmd->add_option("--guard", c.guard, "largest exhaustive enumeration (integer or 2^k); overrides GCCODES_GUARD");
    cmd->add_option("--threads", c.threads, "worker threads, 0 = all cores")->capture_default_str();
}

BigInt parse_size(const std::string& text) {
    const auto caret = text.find('^');
    if (caret != std::string::npos) {
        const BigInt base(text.substr(0, caret));
        return nt::big_pow(base, static_cast<unsigned>(std::stoul(text.substr(caret + 1))));
    }
    return BigInt(text);
}

EnumOptions options(const Common& c) {
    EnumOptions o;
    if (const char* env = std::getenv("GCCODES_GUARD"); env != nullptr && *env != '\0') o.guard = parse_size(env);
    if (!c.guard.empty()) o.guard = parse_size(c.guard);
    if (o.guard < 1) throw std::invalid_argument("guard must be at least 1");
    o.threads = c.threads;
    return o;
}

Residues parse_residues(const Common& c) {
    if (c.block == "qr") return quadratic_residues(c.n);
    Residues out;
    if (c.block.empty() || c.block == "none") return out;
    std::stringstream ss(c.block);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const long v = std::stol(item, &pos);
        if (pos != item.size() || v < 0) throw std::invalid_argument("bad block element '" + item + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

Block make_block(const Common& c) {
    Block b(parse_residues(c), make_orbit_table(c.n, c.q, c.r));
    const auto check = b.check();
    if (!check) throw std::invalid_argument("invalid block: " + check.reason);
    return b;
}

json header(const Common& c) {
    return json{{"schema", 1}, {"n", c.n}, {"q", c.q}, {"r", c.r}};
}

std::string str(const BigInt& v) { return v.str(); }

bool self_dual_defined(const Block& b) {
    return nt::prime_power(b.table().q()).prime == 2 && b.table().r() == 2 && b.is_complete();
}

json block_json(const Block& b) {
    json j{{"elements", b.elements()}, {"complete", b.is_complete()}, {"reversible", b.is_reversible()}};
    j["self_dual"] = self_dual_defined(b) ? json(b.is_self_dual_candidate()) : json(nullptr);
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_blocks(const Common& c, const BlockFilter& filter) {
    json out = header(c);
    auto table = make_orbit_table(c.n, c.q, c.r);
    const bool exists = galois_supplemented_exists(c.n, c.q, c.r);
    out["exists"] = exists;
    if (!exists) {
        const std::string msg = "no Galois supplemented codes: r = " + std::to_string(c.r) +
                                " does not divide ord(q mod n) = " + std::to_string(table->s());
        out["diagnostic"] = msg;
        std::cerr << msg << '\n';
    }
    json list = json::array();
    for (const auto& b : enumerate_blocks(table, filter)) list.push_back(block_json(b));
    out["count"] = list.size();
    out["blocks"] = std::move(list);
    emit(out);
    return 0;
}

int cmd_code(const Common& c) {
    const Block b = make_block(c);
    const auto code = CyclicCode::from_block(b);
    const auto& codec = code.symbols();
    const auto opts = options(c);
    json out = header(c);
    out["block"] = b.elements();
    out["generator"] = coefficient_names(codec, code.generator());
    out["generator_text"] = polynomial_string(codec, code.generator());
    out["dimension"] = code.dimension();
    const Polynomial e = idempotent(code);
    out["idempotent"] = polynomial_string(codec, e);
    out["idempotent_coefficients"] = coefficient_names(codec, e);
    try {
        const auto d = min_distance(code, opts);
        out["min_distance"] = d ? json(*d) : json(nullptr);
    } catch (const GuardExceeded& g) {
        out["min_distance"] = "not computed";
        out["min_distance_required_guard"] = str(g.required());
    }
    out["galois_supplemented"] = code.is_galois_supplemented();
    out["complete"] = b.is_complete();
    out["reversible"] = b.is_reversible();
    out["self_dual"] = self_dual_defined(b) ? json(b.is_self_dual_candidate()) : json(nullptr);
    emit(out);
    return 0;
}

int cmd_enumerator(const Common& c, const std::string& mode, const std::string& subcode, const std::string& format) {
    const Block b = make_block(c);
    const auto code = CyclicCode::from_block(b);
    const auto opts = options(c);
    std::optional<WeightEnumerator> closed, brute;
    const bool want_closed = mode != "brute", want_brute = mode != "closed";
    if (subcode == "none") {
        if (want_closed) closed = fqwe_closed(code);
        if (want_brute) brute = fqwe_brute(code, opts);
    } else if (subcode == "even") {
        if (want_closed) closed = fqwe_even_subcode(code);
        if (want_brute) brute = fqwe_brute(code.even_subcode(), opts);
    } else {
        if (want_closed) closed = fqwe_extended(code);
        if (want_brute) brute = fqwe_brute_extended(code, opts);
    }
    const std::uint32_t len = closed ? closed->n : brute->n;
    bool all_zero = true;

    if (format == "csv") {
        std::cout << "w";
        if (closed) std::cout << ",closed";
        if (brute) std::cout << ",brute";
        if (closed && brute) std::cout << ",diff";
        std::cout << '\n';
        for (std::uint32_t w = 0; w <= len; ++w) {
            std::cout << w;
            if (closed) std::cout << ',' << str(closed->counts[w]);
            if (brute) std::cout << ',' << str(brute->counts[w]);
            if (closed && brute) {
                const BigInt d = closed->counts[w] - brute->counts[w];
                all_zero = all_zero && d == 0;
                std::cout << ',' << str(d);
            }
            std::cout << '\n';
        }
    } else {
        json out = header(c);
        out["block"] = b.elements();
        out["mode"] = mode;
        out["subcode"] = subcode;
        out["length"] = len;
        json rows = json::array();
        for (std::uint32_t w = 0; w <= len; ++w) {
            json row{{"w", w}};
            if (closed) row["closed"] = str(closed->counts[w]);
            if (brute) row["brute"] = str(brute->counts[w]);
            if (closed && brute) {
                const BigInt d = closed->counts[w] - brute->counts[w];
                all_zero = all_zero && d == 0;
                row["diff"] = str(d);
            }
            rows.push_back(std::move(row));
        }
        out["rows"] = std::move(rows);
        if (closed && brute) out["match"] = all_zero;
        emit(out);
    }
    return all_zero ? 0 : kExitFailed;
}

struct DnaArgs {
    std::string construct = "even";
    std::string out;
    bool bound_only = false;
    std::uint64_t seed = 1;
    std::uint64_t verify_pairs = 10'000'000;
    std::uint64_t samples = 1'000'000;
};

int cmd_dna(const Common& c, const DnaArgs& a) {
    if (c.q != 2 || c.r != 2) throw std::invalid_argument("dna requires q = 2, r = 2");
    const Block b = make_block(c);
    json out = header(c);
    out["block"] = b.elements();
    out["lower_bound"] = str(lower_bound(c.n, b.elements()));
    out["complete_code_bound"] = str(complete_code_bound(c.n));
    if (a.bound_only) {
        emit(out);
        return 0;
    }
    const auto opts = options(c);
    const auto code = CyclicCode::from_block(b);
    const auto d = min_distance(code, opts);
    if (!d) throw std::invalid_argument("dna: zero code");
    const DnaCodebook book = a.construct == "split" ? build_rc_pair_split_codebook(code, *d, opts)
                                                    : build_even_subcode_codebook(code, *d, opts);
    VerifyOptions vo;
    vo.max_pairs = a.verify_pairs;
    vo.samples = a.samples;
    vo.seed = a.seed;
    const VerifyReport rep = verify_codebook(book, vo);

    out["construction"] = to_string(book.construction);
    out["d"] = book.claimed_d;
    out["w"] = book.gc_weight;
    out["count"] = book.count;
    json v{{"passed", rep.passed},
           {"sampled", rep.sampled},
           {"pairs_checked", rep.pairs_checked},
           {"gc_uniform", rep.gc_uniform}};
    v["min_distance"] = rep.min_distance ? json(*rep.min_distance) : json(nullptr);
    v["min_rc_distance"] = rep.min_rc_distance ? json(*rep.min_rc_distance) : json(nullptr);
    out["verification"] = v;

    if (!a.out.empty()) {
        std::ofstream fasta(a.out + ".fasta");
        if (!fasta) throw std::runtime_error("cannot write " + a.out + ".fasta");
        write_fasta(fasta, book);
        json meta{{"schema", 1},
                  {"n", book.n},
                  {"d", book.claimed_d},
                  {"w", book.gc_weight},
                  {"block", book.block},
                  {"construction", to_string(book.construction)},
                  {"count", book.count}};
        std::ofstream js(a.out + ".json");
        if (!js) throw std::runtime_error("cannot write " + a.out + ".json");
        js << meta.dump(2) << '\n';
        if (!fasta || !js) throw std::runtime_error("write failed for " + a.out);
        out["files"] = {a.out + ".fasta", a.out + ".json"};
    }
    emit(out);
    return rep.passed ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois supplemented cyclic codes, F_q-weight enumerators and GC-content DNA codes"};
    app.require_subcommand(1);

    Common blocks_c, code_c, enum_c, dna_c;
    BlockFilter filter;
    bool f_complete = false, f_reversible = false, f_self_dual = false;
    std::size_t f_size = 0;
    auto* blocks = app.add_subcommand("blocks", "list valid q^r-blocks");
    add_common(blocks, blocks_c, false);
    blocks->add_flag("--complete", f_complete, "only complete blocks");
    blocks->add_flag("--reversible", f_reversible, "only blocks with -B = B");
    blocks->add_flag("--self-dual", f_self_dual, "only blocks with B = -2B");
    blocks->add_option("--size", f_size, "only blocks of this size");

    auto* code = app.add_subcommand("code", "construct C_B and report its parameters");
    add_common(code, code_c, true);

    std::string mode = "both", subcode = "none", format = "json";
    auto* enumerator = app.add_subcommand("enumerator", "F_q-weight enumerator");
    add_common(enumerator, enum_c, true);
    enumerator->add_option("--mode", mode)->check(CLI::IsMember({"closed", "brute", "both"}))->capture_default_str();
    enumerator->add_option("--subcode", subcode)->check(CLI::IsMember({"none", "even", "extended"}))->capture_default_str();
    enumerator->add_option("--output", format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    DnaArgs dargs;
    auto* dna_cmd = app.add_subcommand("dna", "constant GC-content DNA codebook");
    add_common(dna_cmd, dna_c, true);
    dna_cmd->add_option("--construct", dargs.construct)->check(CLI::IsMember({"even", "split"}))->capture_default_str();
    dna_cmd->add_option("--out", dargs.out, "write <out>.fasta and <out>.json");
    dna_cmd->add_flag("--bound-only", dargs.bound_only, "closed-form bounds only, no enumeration");
    dna_cmd->add_option("--seed", dargs.seed, "seed for sampled verification")->capture_default_str();
    dna_cmd->add_option("--verify-pairs", dargs.verify_pairs, "exhaustive verification limit")->capture_default_str();
    dna_cmd->add_option("--samples", dargs.samples, "pairs drawn in sampled verification")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (blocks->parsed()) {
            if (f_complete) filter.complete = true;
            if (f_reversible) filter.reversible = true;
            if (f_self_dual) filter.self_dual = true;
            if (f_size != 0) filter.size = f_size;
            return cmd_blocks(blocks_c, filter);
        }
        if (code->parsed()) return cmd_code(code_c);
        if (enumerator->parsed()) return cmd_enumerator(enum_c, mode, subcode, format);
        if (dna_cmd->parsed()) return cmd_dna(dna_c, dargs);
    } catch (const GuardExceeded& g) {
        emit(json{{"schema", 1},
                  {"error", "guard exceeded"},
                  {"required", str(g.required())},
                  {"guard", str(g.guard())}});
        return kExitGuard;
    } catch (const std::exception& e) {
        emit(json{{"schema", 1}, {"error", e.what()}});
        return kExitError;
    }
    return kExitError;
}
