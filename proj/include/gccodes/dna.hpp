#pragma once

// DNA codes with constant GC-content from reversible Galois supplemented
// codes over GF(4).
//
// Alphabet: G = 0, C = 1, A = w, T = w + 1, where w is the canonical element of
// order 3. In symbol indices (see SymbolCodec) these are 0, 1, 2, 3, so the
// letter of symbol s is "GCAT"[s], GC-content counts symbols below 2 and the
// complement is s ^ 1.
//
// Codebook words are packed as two bit planes (GF(2)-digits of the symbol),
// which limits lengths to 64.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "code.hpp"
#include "enumerate.hpp"

namespace gccodes {

namespace dna {

inline constexpr std::string_view kLetters = "GCAT";

inline char letter(Symbol s) {
    if (s > 3) throw std::invalid_argument("dna::letter: symbol outside GF(4)");
    return kLetters[s];
}

inline Symbol symbol_of(char c) {
    const auto pos = kLetters.find(c);
    if (pos == std::string_view::npos) throw std::invalid_argument(std::string("dna::symbol_of: not a nucleotide: ") + c);
    return static_cast<Symbol>(pos);
}

}  // namespace dna

/// A word in both representations.
struct DnaWord {
    std::string letters;
    Word field_form;

    static DnaWord from_letters(std::string_view s) {
        DnaWord w{std::string(s), {}};
        for (char c : s) w.field_form.push_back(dna::symbol_of(c));
        return w;
    }
    static DnaWord from_field(const Word& v) {
        DnaWord w{{}, v};
        for (Symbol s : v) w.letters.push_back(dna::letter(s));
        return w;
    }
    friend bool operator==(const DnaWord&, const DnaWord&) = default;
};

/// (x_n + 1, ..., x_1 + 1).
inline Word reverse_complement(const Word& v) {
    Word out(v.rbegin(), v.rend());
    for (auto& s : out) {
        if (s > 3) throw std::invalid_argument("reverse_complement: symbol outside GF(4)");
        s ^= 1U;
    }
    return out;
}

/// Number of coordinates in GF(2).
inline std::uint32_t gc_content(const Word& v) {
    return static_cast<std::uint32_t>(std::count_if(v.begin(), v.end(), [](Symbol s) { return s < 2; }));
}

/// Bit-plane word: bit i of lo/hi is digit 0/1 of coordinate i.
struct PackedWord {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    friend bool operator==(const PackedWord&, const PackedWord&) = default;
};

namespace detail {

inline std::uint64_t reverse_bits(std::uint64_t x, std::uint32_t n) {
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i < n; ++i) out |= ((x >> i) & 1U) << (n - 1 - i);
    return out;
}

inline std::uint64_t low_mask(std::uint32_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace detail

inline PackedWord pack(const Word& v) {
    if (v.size() > 64) throw std::invalid_argument("pack: length above 64");
    PackedWord p;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > 3) throw std::invalid_argument("pack: symbol outside GF(4)");
        p.lo |= static_cast<std::uint64_t>(v[i] & 1U) << i;
        p.hi |= static_cast<std::uint64_t>(v[i] >> 1U) << i;
    }
    return p;
}

inline Word unpack(const PackedWord& p, std::uint32_t n) {
    Word v(n);
    for (std::uint32_t i = 0; i < n; ++i) v[i] = static_cast<Symbol>(((p.lo >> i) & 1U) | (((p.hi >> i) & 1U) << 1U));
    return v;
}

inline PackedWord reverse_complement(const PackedWord& p, std::uint32_t n) {
    return {detail::reverse_bits(p.lo, n) ^ detail::low_mask(n), detail::reverse_bits(p.hi, n)};
}

inline std::uint32_t distance(const PackedWord& a, const PackedWord& b) {
    return static_cast<std::uint32_t>(std::popcount((a.lo ^ b.lo) | (a.hi ^ b.hi)));
}

inline std::uint32_t gc_content(const PackedWord& p, std::uint32_t n) {
    return n - static_cast<std::uint32_t>(std::popcount(p.hi & detail::low_mask(n)));
}

/// Lexicographic order on words, coordinate 0 first, comparing symbols by
/// the canonical rank of the field element they stand for.
class CanonicalOrder {
public:
    explicit CanonicalOrder(const SymbolCodec& codec) {
        if (codec.size() != 4) throw std::invalid_argument("CanonicalOrder: requires GF(4) symbols");
        for (Symbol s = 0; s < 4; ++s) key_[s] = codec.rank(s);
    }
    bool operator()(const PackedWord& a, const PackedWord& b) const noexcept {
        const std::uint64_t diff = (a.lo ^ b.lo) | (a.hi ^ b.hi);
        if (diff == 0) return false;
        const auto i = static_cast<unsigned>(std::countr_zero(diff));
        return key_[sym(a, i)] < key_[sym(b, i)];
    }

private:
    static Symbol sym(const PackedWord& p, unsigned i) noexcept {
        return static_cast<Symbol>(((p.lo >> i) & 1U) | (((p.hi >> i) & 1U) << 1U));
    }
    std::array<std::uint64_t, 4> key_{};
};

enum class Construction { even_subcode, rc_pair_split };

inline const char* to_string(Construction c) {
    return c == Construction::even_subcode ? "even_subcode" : "rc_pair_split";
}

struct DnaCodebook {
    std::uint32_t n = 0;
    std::uint32_t claimed_d = 0;
    std::uint32_t gc_weight = 0;
    Residues block;
    Construction construction = Construction::even_subcode;
    /// Number of words; equals words.size() unless the book was built count-only.
    std::uint64_t count = 0;
    /// Sorted in CanonicalOrder.
    std::vector<PackedWord> words;

    DnaWord word(std::size_t i) const { return DnaWord::from_field(unpack(words.at(i), n)); }
};

/// 2^(n - 2|B| - 1) * C(n, (n+1)/2) for a valid reversible 2^2-block B with n odd.
inline BigInt lower_bound(std::uint32_t n, const Residues& block) {
    if (n % 2 == 0) throw std::invalid_argument("lower_bound: n must be odd");
    auto table = make_orbit_table(n, 2, 2);
    const Block b(block, table);
    const auto check = b.check();
    if (!check) throw std::invalid_argument("lower_bound: invalid block (" + check.reason + ")");
    if (!b.is_reversible()) throw std::invalid_argument("lower_bound: block is not reversible");
    if (2 * b.size() + 1 > n) throw std::invalid_argument("lower_bound: 2|B| + 1 exceeds n");
    return nt::big_pow(BigInt(2), static_cast<unsigned>(n - 2 * b.size() - 1)) * nt::binomial(n, (n + 1) / 2);
}

/// Same count, keyed by the verified minimum distance d of C_B (d does not enter the value).
inline BigInt lower_bound(std::uint32_t n, const Residues& block, std::uint32_t d) {
    if (d == 0 || d > n) throw std::invalid_argument("lower_bound: d must lie in 1..n");
    return lower_bound(n, block);
}

/// C(n, (n+1)/2), the bound for complete codes.
inline BigInt complete_code_bound(std::uint32_t n) { return nt::binomial(n, (n + 1) / 2); }

/// The odd one of (n-1)/2 and (n+1)/2.
inline std::uint32_t odd_half_weight(std::uint32_t n) {
    return ((n - 1) / 2) % 2 == 1 ? (n - 1) / 2 : (n + 1) / 2;
}

namespace detail {

inline void require_dna_source(const CyclicCode& code, const char* what) {
    const std::string w(what);
    if (code.q() != 2 || code.r() != 2) throw std::invalid_argument(w + ": requires q = 2, r = 2");
    if (code.n() % 2 == 0) throw std::invalid_argument(w + ": n must be odd");
    if (code.n() > 64) throw std::invalid_argument(w + ": n above 64");
    if (!code.is_reversible()) throw std::invalid_argument(w + ": code is not reversible");
    if (!code.is_galois_supplemented()) throw std::invalid_argument(w + ": code is not Galois supplemented");
    if (!code.contains(Word(code.n(), 1))) throw std::invalid_argument(w + ": code does not contain the all-ones word");
}

using PackedList = std::vector<PackedWord>;

inline void append_list(PackedList& into, PackedList&& from) { into.insert(into.end(), from.begin(), from.end()); }

template <class View>
PackedWord pack_view(const View& v) {
    if constexpr (requires { v.planes(); })
        return {v.planes()[0], v.planes()[1]};
    else
        return pack(v.word());
}

struct Selected {
    std::uint64_t count = 0;
    PackedList words;
};

template <class Keep>
Selected select_words(const CyclicCode& code, const std::vector<Word>& generators, bool store,
                      const EnumOptions& opts, Keep keep) {
    const SpanEnumerator span(code.symbols(), code.n(), generators);
    if (!store) {
        const auto count = span.reduce(
            opts, [] { return std::uint64_t{0}; },
            [&](std::uint64_t& c, const auto& v) {
                const PackedWord p = pack_view(v);
                if (keep(p, v.base_weight())) ++c;
            },
            [](std::uint64_t& a, std::uint64_t b) { a += b; });
        return {count, {}};
    }
    auto words = span.reduce(
        opts, [] { return PackedList{}; },
        [&](PackedList& out, const auto& v) {
            const PackedWord p = pack_view(v);
            if (keep(p, v.base_weight())) out.push_back(p);
        },
        append_list);
    std::sort(words.begin(), words.end(), CanonicalOrder(code.symbols()));
    return {words.size(), std::move(words)};
}

inline DnaCodebook finish_book(const CyclicCode& code, std::uint32_t d, std::uint32_t w, Construction c,
                               Selected&& sel) {
    DnaCodebook book;
    book.n = code.n();
    book.claimed_d = d;
    book.gc_weight = w;
    book.block = code.roots();
    book.construction = c;
    book.count = sel.count;
    book.words = std::move(sel.words);
    const BigInt expected = nt::big_pow(BigInt(2), static_cast<unsigned>(code.n() - 2 * code.roots().size() - 1)) *
                            nt::binomial(code.n(), (code.n() + 1) / 2);
    if (BigInt(book.count) != expected) throw std::logic_error("DNA codebook: size differs from the closed-form count");
    return book;
}

}  // namespace detail

/// Words of the even weight subcode with GC-content the odd one of (n -+ 1)/2.
/// With store = false only the count is computed.
inline DnaCodebook build_even_subcode_codebook(const CyclicCode& code, std::uint32_t d, const EnumOptions& opts = {},
                                               bool store = true) {
    detail::require_dna_source(code, "build_even_subcode_codebook");
    const std::uint32_t w = odd_half_weight(code.n());
    const CyclicCode even = code.even_subcode();
    auto sel = detail::select_words(even, even.fp_generators(), store, opts,
                                    [w](const PackedWord&, std::uint32_t gc) { return gc == w; });
    return detail::finish_book(code, d, w, Construction::even_subcode, std::move(sel));
}

/// Words v of C with GC-content (n+1)/2 and v < v^RC in CanonicalOrder.
inline DnaCodebook build_rc_pair_split_codebook(const CyclicCode& code, std::uint32_t d, const EnumOptions& opts = {},
                                                bool store = true) {
    detail::require_dna_source(code, "build_rc_pair_split_codebook");
    const std::uint32_t n = code.n();
    const std::uint32_t w = (n + 1) / 2;
    const CanonicalOrder less(code.symbols());
    auto sel = detail::select_words(code, code.fp_generators(), store, opts,
                                    [w, n, &less](const PackedWord& p, std::uint32_t gc) {
                                        return gc == w && less(p, reverse_complement(p, n));
                                    });
    return detail::finish_book(code, d, w, Construction::rc_pair_split, std::move(sel));
}

struct VerifyOptions {
    /// Above this many pair checks, verification samples random pairs.
    std::uint64_t max_pairs = 10'000'000;
    /// Pairs drawn in sampled mode.
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
};

struct VerifyReport {
    std::uint64_t words = 0;
    /// Minimum distance over distinct pairs; nullopt for fewer than two words.
    std::optional<std::uint32_t> min_distance;
    /// Minimum of d(u, v^RC) over all u, v including u = v.
    std::optional<std::uint32_t> min_rc_distance;
    bool gc_uniform = true;
    bool sampled = false;
    std::uint64_t pairs_checked = 0;
    bool passed = false;
};

/// Checks the three codebook conditions against book.claimed_d and book.gc_weight.
/// Uses d(u, v^RC) = d(u^RC, v), so unordered pairs plus u = v cover all cases.
inline VerifyReport verify_codebook(const DnaCodebook& book, const VerifyOptions& opts = {}) {
    if (book.words.size() != book.count) throw std::invalid_argument("verify_codebook: book was built count-only");
    VerifyReport rep;
    const auto n = book.n;
    const auto& words = book.words;
    const std::uint64_t m = words.size();
    rep.words = m;
    for (const auto& p : words)
        if (gc_content(p, n) != book.gc_weight) rep.gc_uniform = false;

    std::vector<PackedWord> rc(m);
    for (std::uint64_t i = 0; i < m; ++i) rc[i] = reverse_complement(words[i], n);

    std::uint32_t dmin = n + 1, rcmin = n + 1;
    auto check_pair = [&](std::uint64_t i, std::uint64_t j) {
        if (i != j) dmin = std::min(dmin, distance(words[i], words[j]));
        rcmin = std::min(rcmin, distance(words[i], rc[j]));
        ++rep.pairs_checked;
    };
    const std::uint64_t pairs = m * (m + 1) / 2;
    if (pairs <= opts.max_pairs) {
        for (std::uint64_t i = 0; i < m; ++i)
            for (std::uint64_t j = i; j < m; ++j) check_pair(i, j);
    } else {
        rep.sampled = true;
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, m - 1);
        for (std::uint64_t i = 0; i < m; ++i) check_pair(i, i);
        for (std::uint64_t t = 0; t < opts.samples; ++t) check_pair(pick(rng), pick(rng));
    }
    if (m >= 2 && dmin <= n) rep.min_distance = dmin;
    if (m >= 1) rep.min_rc_distance = rcmin;
    rep.passed = rep.gc_uniform && (!rep.min_distance || *rep.min_distance >= book.claimed_d) &&
                 (!rep.min_rc_distance || *rep.min_rc_distance >= book.claimed_d);
    return rep;
}

/// One record per word: ">word_<index> gc=<w>" and the sequence line.
inline void write_fasta(std::ostream& out, const DnaCodebook& book) {
    for (std::size_t i = 0; i < book.words.size(); ++i) {
        const auto word = unpack(book.words[i], book.n);
        out << ">word_" << i << " gc=" << gc_content(word) << '\n';
        for (Symbol s : word) out << dna::letter(s);
        out << '\n';
    }
}

}  // namespace gccodes
