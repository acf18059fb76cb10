#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "gccodes/dna.hpp"
#include "gccodes/structure.hpp"

using namespace gccodes;

namespace {

constexpr Symbol W = 2, W2 = 3;

CyclicCode code(std::uint32_t n, Residues b) {
    return CyclicCode::from_block(Block(std::move(b), make_orbit_table(n, 2, 2)));
}

const DnaCodebook& qr13_even() {
    static const DnaCodebook book = build_even_subcode_codebook(code(13, quadratic_residues(13)), 5);
    return book;
}

std::set<std::pair<std::uint64_t, std::uint64_t>> as_set(const std::vector<PackedWord>& ws) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> s;
    for (const auto& p : ws) s.insert({p.lo, p.hi});
    return s;
}

}  // namespace

TEST(Alphabet, MapAndComplement) {
    const auto c = code(3, {1});
    const auto& codec = c.symbols();
    const auto w = FieldElement::generator(c.field());
    EXPECT_EQ(codec.element(dna::symbol_of('A')), w);
    EXPECT_EQ(codec.element(dna::symbol_of('T')), w + FieldElement::one(c.field()));
    EXPECT_EQ(dna::symbol_of('G'), 0U);
    EXPECT_EQ(dna::symbol_of('C'), 1U);
    const auto one = codec.index_of(FieldElement::one(c.field()));
    for (char x : std::string("GCAT")) {
        const Symbol s = dna::symbol_of(x);
        EXPECT_EQ(codec.add(s, one), s ^ 1U);
    }
    EXPECT_EQ(dna::letter(dna::symbol_of('A') ^ 1U), 'T');
    EXPECT_EQ(dna::letter(dna::symbol_of('G') ^ 1U), 'C');
    EXPECT_THROW(dna::symbol_of('U'), std::invalid_argument);
    EXPECT_THROW(dna::letter(4), std::invalid_argument);
}

TEST(DnaWordType, RoundTrip) {
    const auto d = DnaWord::from_letters("GATTACA");
    EXPECT_EQ(DnaWord::from_field(d.field_form), d);
    EXPECT_EQ(gc_content(d.field_form), 2U);
}

TEST(ReverseComplement, Examples) {
    EXPECT_EQ(reverse_complement(Word{0, W, 1}), (Word{0, W2, 1}));
    EXPECT_EQ(DnaWord::from_field(reverse_complement(DnaWord::from_letters("GAC").field_form)).letters, "GTC");
    EXPECT_EQ(reverse_complement(Word{}), Word{});
}

TEST(ReverseComplement, NoFixedPointForOddLength) {
    for (std::uint32_t n : {1U, 3U, 5U}) {
        std::uint64_t total = 1ULL << (2 * n);
        for (std::uint64_t m = 0; m < total; ++m) {
            Word v(n);
            for (std::uint32_t i = 0; i < n; ++i) v[i] = static_cast<Symbol>((m >> (2 * i)) & 3U);
            ASSERT_NE(reverse_complement(v), v);
            ASSERT_EQ(reverse_complement(reverse_complement(v)), v);
            ASSERT_EQ(gc_content(reverse_complement(v)), gc_content(v));
            ASSERT_EQ(unpack(reverse_complement(pack(v), n), n), reverse_complement(v));
        }
    }
}

TEST(GcContent, Examples) {
    EXPECT_EQ(gc_content(Word{W, 0, 1, W2}), 2U);
    EXPECT_EQ(gc_content(Word(9, 0)), 9U);
    EXPECT_EQ(gc_content(pack(Word{W, 0, 1, W2}), 4), 2U);
}

TEST(Packed, DistanceAndRoundTrip) {
    const Word a{0, 1, W, W2, 0}, b{0, W, W, 1, 0};
    EXPECT_EQ(unpack(pack(a), 5), a);
    EXPECT_EQ(distance(pack(a), pack(b)), 2U);
    Word full(64, W2);
    EXPECT_EQ(unpack(reverse_complement(pack(full), 64), 64), reverse_complement(full));
    EXPECT_THROW(pack(Word(65, 0)), std::invalid_argument);
}

TEST(Bounds, PublishedValues) {
    EXPECT_EQ(lower_bound(17, {2, 8, 9, 15}, 4), BigInt(6223360));
    EXPECT_EQ(lower_bound(17, {2, 6, 7, 8, 9, 10, 11, 15}, 7), BigInt(24310));
    EXPECT_EQ(lower_bound(13, quadratic_residues(13), 5), BigInt(1716));
    EXPECT_EQ(lower_bound(29, quadratic_residues(29), 11), BigInt(77558760));
    EXPECT_EQ(complete_code_bound(29), BigInt(77558760));
}

TEST(Bounds, Errors) {
    EXPECT_THROW(lower_bound(17, {2, 8}), std::invalid_argument);
    EXPECT_THROW(lower_bound(3, {1}), std::invalid_argument);  // valid but not reversible
    EXPECT_THROW(lower_bound(13, quadratic_residues(13), 0), std::invalid_argument);
}

TEST(Bounds, OddHalfWeight) {
    EXPECT_EQ(odd_half_weight(13), 7U);
    EXPECT_EQ(odd_half_weight(17), 9U);
    EXPECT_EQ(odd_half_weight(11), 5U);
}

TEST(Codebook, EvenSubcodeThirteen) {
    const auto& book = qr13_even();
    EXPECT_EQ(book.count, 1716U);
    EXPECT_EQ(book.words.size(), 1716U);
    EXPECT_EQ(book.gc_weight, 7U);
    EXPECT_EQ(book.construction, Construction::even_subcode);
    EXPECT_TRUE(std::is_sorted(book.words.begin(), book.words.end(),
                               CanonicalOrder(code(13, quadratic_residues(13)).symbols())));
    const auto c = code(13, quadratic_residues(13)).even_subcode();
    for (std::size_t i = 0; i < book.words.size(); i += 97) {
        const auto w = book.word(i);
        EXPECT_TRUE(c.contains(w.field_form));
        EXPECT_EQ(gc_content(w.field_form), 7U);
    }
}

TEST(Codebook, SplitMatchesEvenCount) {
    for (auto [n, b, d] : {std::tuple{13U, quadratic_residues(13), 5U}, {17U, Residues{2, 6, 7, 8, 9, 10, 11, 15}, 7U},
                           {5U, Residues{1, 4}, 2U}}) {
        const auto c = code(n, b);
        const auto split = build_rc_pair_split_codebook(c, d);
        const auto even = build_even_subcode_codebook(c, d);
        EXPECT_EQ(split.count, even.count) << n;
        EXPECT_EQ(BigInt(split.count), lower_bound(n, b)) << n;
        EXPECT_EQ(split.gc_weight, (n + 1) / 2);
        const auto set = as_set(split.words);
        for (const auto& p : split.words) {
            const auto rc = reverse_complement(p, n);
            EXPECT_FALSE(set.count({rc.lo, rc.hi})) << n;
            EXPECT_TRUE(c.contains(unpack(p, n)));
        }
    }
}

TEST(Codebook, SeventeenComplete) {
    const auto book = build_even_subcode_codebook(code(17, {2, 6, 7, 8, 9, 10, 11, 15}), 7);
    EXPECT_EQ(book.count, 24310U);
    VerifyOptions exhaustive;
    exhaustive.max_pairs = 300'000'000;
    const auto rep = verify_codebook(book, exhaustive);
    EXPECT_FALSE(rep.sampled);
    EXPECT_TRUE(rep.passed);
}

TEST(Codebook, CountOnlyLarge) {
    const auto book = build_even_subcode_codebook(code(17, {2, 8, 9, 15}), 4, {}, false);
    EXPECT_EQ(book.count, 6223360U);
    EXPECT_TRUE(book.words.empty());
    EXPECT_THROW(verify_codebook(book), std::invalid_argument);
}

TEST(Codebook, Preconditions) {
    EXPECT_THROW(build_even_subcode_codebook(code(3, {1}), 2), std::invalid_argument);  // not reversible
    EXPECT_THROW(build_rc_pair_split_codebook(code(5, {1}), 2), std::invalid_argument);
    const auto c8 = CyclicCode::from_block(Block({1, 3}, make_orbit_table(7, 2, 3)));
    EXPECT_THROW(build_even_subcode_codebook(c8, 2), std::invalid_argument);
    EnumOptions tiny;
    tiny.guard = 100;
    EXPECT_THROW(build_even_subcode_codebook(code(13, quadratic_residues(13)), 5, tiny), GuardExceeded);
}

TEST(Codebook, DeterministicAcrossThreads) {
    EnumOptions four;
    four.threads = 4;
    const auto a = build_rc_pair_split_codebook(code(13, quadratic_residues(13)), 5);
    const auto b = build_rc_pair_split_codebook(code(13, quadratic_residues(13)), 5, four);
    EXPECT_EQ(a.words, b.words);
}

TEST(Verify, ThirteenPasses) {
    const auto rep = verify_codebook(qr13_even());
    EXPECT_TRUE(rep.passed);
    EXPECT_FALSE(rep.sampled);
    EXPECT_TRUE(rep.gc_uniform);
    EXPECT_GE(*rep.min_distance, 5U);
    EXPECT_GE(*rep.min_rc_distance, 5U);
    EXPECT_EQ(rep.pairs_checked, 1716ULL * 1717 / 2);
}

TEST(Verify, SingleWordBook) {
    DnaCodebook book = qr13_even();
    book.words.resize(1);
    book.count = 1;
    const auto rep = verify_codebook(book);
    EXPECT_FALSE(rep.min_distance.has_value());
    const auto self_rc = distance(book.words[0], reverse_complement(book.words[0], 13));
    EXPECT_EQ(*rep.min_rc_distance, self_rc);
    EXPECT_EQ(rep.passed, self_rc >= 5);
}

TEST(Verify, RcReplacementFails) {
    DnaCodebook book = qr13_even();
    book.words.push_back(reverse_complement(book.words[10], 13));
    ++book.count;
    const auto rep = verify_codebook(book);
    EXPECT_FALSE(rep.passed);
    EXPECT_EQ(*rep.min_rc_distance, 0U);
    EXPECT_TRUE(rep.gc_uniform);
}

TEST(Verify, GcMismatchFails) {
    DnaCodebook book = qr13_even();
    book.gc_weight = 6;
    EXPECT_FALSE(verify_codebook(book).passed);
}

TEST(Verify, SampledModeIsTagged) {
    VerifyOptions o;
    o.max_pairs = 1000;
    o.samples = 5000;
    const auto rep = verify_codebook(qr13_even(), o);
    EXPECT_TRUE(rep.sampled);
    EXPECT_EQ(rep.pairs_checked, 1716U + 5000U);
    EXPECT_TRUE(rep.passed);
}

TEST(Fasta, Format) {
    const auto& book = qr13_even();
    std::ostringstream out;
    write_fasta(out, book);
    std::istringstream in(out.str());
    std::string header, seq;
    std::size_t i = 0;
    while (std::getline(in, header) && std::getline(in, seq)) {
        EXPECT_EQ(header, ">word_" + std::to_string(i) + " gc=7");
        EXPECT_EQ(seq, book.word(i).letters);
        EXPECT_EQ(std::count_if(seq.begin(), seq.end(), [](char c) { return c == 'G' || c == 'C'; }), 7);
        ++i;
    }
    EXPECT_EQ(i, 1716U);
}
