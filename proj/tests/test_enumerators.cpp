#include <gtest/gtest.h>

#include <random>

#include "gccodes/enumerators.hpp"
#include "oracles.hpp"

using namespace gccodes;

namespace {

CyclicCode code(std::uint32_t n, Residues b, std::uint64_t q = 2, unsigned r = 2) {
    return CyclicCode::from_block(Block(std::move(b), make_orbit_table(n, q, r)));
}

std::vector<BigInt> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(FqweClosed, LengthFive) {
    const auto c = code(5, {1, 4});
    EXPECT_EQ(fqwe_closed(c).counts, ints({2, 10, 20, 20, 10, 2}));
}

TEST(FqweClosed, FullSpace) {
    for (auto [n, q, r] : {std::tuple{5U, 2ULL, 2U}, {7U, 2ULL, 3U}, {5U, 3ULL, 2U}}) {
        const auto c = CyclicCode::from_roots(make_orbit_table(n, q, r), {});
        const auto e = fqwe_closed(c);
        EXPECT_EQ(e.total(), nt::big_pow(BigInt(q), r * n));
        for (std::uint32_t w = 0; w <= n; ++w)
            EXPECT_EQ(e[w], nt::big_pow(BigInt(q), n) * nt::binomial(n, w) * nt::big_pow(nt::big_pow(BigInt(q), r - 1) - 1, n - w));
    }
}

TEST(FqweClosed, LengthSeventeen) {
    const auto c = code(17, {2, 8, 9, 15});
    EXPECT_EQ(fqwe_closed(c)[9], nt::big_pow(BigInt(2), 9) * nt::binomial(17, 9));
}

TEST(FqweClosed, RejectsNonCoprime) {
    const auto c = CyclicCode::from_roots(make_orbit_table(3, 2, 2), {1, 2});
    EXPECT_THROW(fqwe_closed(c), std::invalid_argument);
}

TEST(FqweBrute, MatchesNaiveOracle) {
    for (auto [n, q, r, b] : {std::tuple{5U, 2ULL, 2U, Residues{1, 4}}, {13U, 2ULL, 2U, quadratic_residues(13)},
                              {7U, 2ULL, 3U, Residues{1, 3}}, {5U, 3ULL, 2U, Residues{1, 4}}, {5U, 4ULL, 2U, Residues{1}}}) {
        const auto c = code(n, b, q, r);
        EXPECT_EQ(fqwe_brute(c).counts, oracle::fq_distribution(c)) << n << " " << q << " " << r;
    }
}

TEST(FqweBrute, ZeroCode) {
    const auto c = CyclicCode::from_roots(make_orbit_table(5, 2, 2), {0, 1, 2, 3, 4});
    EXPECT_EQ(fqwe_brute(c).counts, ints({0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(psi_weight_enumerator_brute(c).counts, ints({1, 0, 0, 0, 0, 0}));
}

TEST(FqweBrute, QrThirteen) {
    const auto c = code(13, quadratic_residues(13));
    const auto b = fqwe_brute(c);
    EXPECT_EQ(b.total(), 16384);
    for (std::uint32_t w = 0; w <= 13; ++w) EXPECT_EQ(b[w], 2 * nt::binomial(13, w));
}

TEST(FqweBrute, ClosedFormOnEveryBlock) {
    const std::vector<std::tuple<std::uint32_t, std::uint64_t, unsigned>> configs = {
        {3, 2, 2}, {5, 2, 2}, {11, 2, 2}, {13, 2, 2}, {17, 2, 2}, {7, 2, 3}, {9, 2, 3}, {5, 3, 2}, {7, 3, 2}, {5, 4, 2}};
    for (auto [n, q, r] : configs) {
        auto t = make_orbit_table(n, q, r);
        for (const auto& b : enumerate_blocks(t)) {
            const auto c = CyclicCode::from_block(b);
            if (c.cardinality() > (BigInt(1) << 24)) continue;
            ASSERT_EQ(fqwe_brute(c), fqwe_closed(c)) << n << " " << q << " " << r;
        }
    }
}

TEST(FqweBrute, ThreadCountDoesNotChangeResult) {
    const auto c = code(17, {2, 6, 7, 8, 9, 10, 11, 15});
    EnumOptions one, four;
    four.threads = 4;
    EXPECT_EQ(fqwe_brute(c, one), fqwe_brute(c, four));
    EXPECT_EQ(hamming_brute(c, one), hamming_brute(c, four));
}

TEST(FqweBrute, GuardReportsRequiredSize) {
    const auto c = code(13, quadratic_residues(13));
    EnumOptions o;
    o.guard = 1000;
    try {
        fqwe_brute(c, o);
        FAIL() << "expected GuardExceeded";
    } catch (const GuardExceeded& g) {
        EXPECT_EQ(g.required(), 16384);
        EXPECT_EQ(g.guard(), 1000);
    }
}

TEST(PsiImage, GaloisCoprimeStructure) {
    for (auto [n, q, r, b] : {std::tuple{5U, 2ULL, 2U, Residues{1, 4}}, {13U, 2ULL, 2U, quadratic_residues(13)},
                              {7U, 2ULL, 3U, Residues{1, 3}}, {5U, 3ULL, 2U, Residues{1, 4}}}) {
        const auto c = code(n, b, q, r);
        const auto a = psi_weight_enumerator_brute(c);
        const BigInt qq = nt::big_pow(BigInt(q), r - 1) - 1;
        for (std::uint32_t w = 0; w <= n; ++w) EXPECT_EQ(a[w], nt::binomial(n, w) * nt::big_pow(qq, w)) << n << " " << w;
    }
}

TEST(PsiImage, LengthFiveExample) {
    EXPECT_EQ(psi_weight_enumerator_brute(code(5, {1, 4})).counts, ints({1, 5, 10, 10, 5, 1}));
}

TEST(PsiImage, BaseFieldGeneratorIdentity) {
    // g = x^2 + x + 1 over GF(4), n = 3: not Galois coprime, lcm(g, g^sigma) = g.
    const auto c = CyclicCode::from_roots(make_orbit_table(3, 2, 2), {1, 2});
    EXPECT_EQ(c.cardinality(), 4);
    const auto b = fqwe_brute(c);
    const auto a = psi_weight_enumerator_brute(c);
    const auto l = conjugate_lcm(c);
    EXPECT_EQ(*l.degree(), 2U);
    const BigInt scale = nt::big_pow(BigInt(2), 3 - 2);
    for (std::uint32_t w = 0; w <= 3; ++w) EXPECT_EQ(b[w], scale * a[3 - w]);
}

TEST(PsiImage, ReciprocalIdentityOnAllDivisors) {
    for (std::uint32_t n : {3U, 5U, 9U}) {
        auto t = make_orbit_table(n, 2, 2);
        const auto& orbits = t->h_orbits();
        for (std::uint64_t mask = 0; mask < (1ULL << orbits.size()); ++mask) {
            Residues roots;
            for (std::size_t i = 0; i < orbits.size(); ++i)
                if ((mask >> i) & 1U) roots.insert(roots.end(), orbits[i].begin(), orbits[i].end());
            const auto c = CyclicCode::from_roots(t, roots);
            const auto b = fqwe_brute(c);
            const auto a = psi_weight_enumerator_brute(c);
            const BigInt scale = nt::big_pow(BigInt(2), n - static_cast<unsigned>(*conjugate_lcm(c).degree()));
            for (std::uint32_t w = 0; w <= n; ++w) ASSERT_EQ(b[w], scale * a[n - w]) << n << " " << mask;
        }
    }
}

TEST(FqweR2, GaloisCoprimeMatchesClosedForm) {
    for (std::uint32_t n : {5U, 11U, 13U}) {
        for (const auto& b : enumerate_blocks(make_orbit_table(n, 2, 2))) {
            const auto c = CyclicCode::from_block(b);
            EXPECT_EQ(fqwe_r2(c), fqwe_closed(c));
        }
    }
}

TEST(FqweR2, RepetitionCode) {
    const std::uint32_t n = 5;
    const auto c = CyclicCode::from_roots(make_orbit_table(n, 2, 2), {1, 2, 3, 4});
    const auto b = fqwe_r2(c);
    EXPECT_EQ(b[n], 2);
    EXPECT_EQ(b[0], 2);
    EXPECT_EQ(b.total(), 4);
    EXPECT_EQ(b, fqwe_brute(c));
}

TEST(FqweR2, MixedFactorsLengthFifteen) {
    auto t = make_orbit_table(15, 2, 2);
    // g_B for a block times x + 1, plus a few non-coprime root sets.
    const std::vector<Residues> root_sets = {{0, 1, 4}, {0, 1, 4, 2, 8}, {1, 2, 4, 8}, {0, 5, 10, 3, 12}, {3, 6, 9, 12}};
    for (const auto& rs : root_sets) {
        const auto c = CyclicCode::from_roots(t, rs);
        EXPECT_EQ(fqwe_r2(c), fqwe_brute(c)) << c.roots().size();
    }
}

TEST(FqweR2, RejectsOtherDegrees) {
    EXPECT_THROW(fqwe_r2(code(7, {1}, 2, 3)), std::invalid_argument);
}

TEST(FqweSubcode, TrivialG0IsClosedForm) {
    const auto c = code(13, quadratic_residues(13));
    EXPECT_EQ(fqwe_subcode(c, Polynomial::one(c.field())), fqwe_closed(c));
}

TEST(FqweSubcode, EvenSubcodeLengthFive) {
    const auto c = code(5, {1, 4});
    const auto x1 = Polynomial::from_integers(c.field(), {-1, 1});
    const auto s = fqwe_subcode(c, x1);
    EXPECT_EQ(s.counts, ints({0, 5, 0, 10, 0, 1}));
    EXPECT_EQ(s, fqwe_even_subcode(c));
    EXPECT_EQ(s, fqwe_brute(c.even_subcode()));
}

TEST(FqweSubcode, GeneralG0MatchesBruteForce) {
    // n = 15 over GF(4) and n = 7 over GF(8): g0 a product of GF(q)-irreducible factors coprime to g.
    {
        auto t = make_orbit_table(15, 2, 2);
        const auto c = CyclicCode::from_block(Block({1, 4}, t));
        ASSERT_TRUE(c.is_galois_supplemented());
        for (const Residues& g0_roots : {Residues{0}, Residues{5, 10}, Residues{0, 3, 6, 9, 12}, Residues{7, 11, 13, 14}}) {
            const auto g0 = CyclicCode::from_roots(t, g0_roots).generator();
            ASSERT_TRUE(coefficients_in_subfield(g0, 1));
            Residues all = c.roots();
            all.insert(all.end(), g0_roots.begin(), g0_roots.end());
            const auto sub = CyclicCode::from_roots(t, all);
            EXPECT_EQ(fqwe_subcode(c, g0), fqwe_brute(sub)) << g0_roots.size();
        }
    }
    {
        auto t = make_orbit_table(7, 2, 3);
        const auto c = CyclicCode::from_block(Block({1}, t));
        const auto g0 = CyclicCode::from_roots(t, {0}).generator();
        EXPECT_EQ(fqwe_subcode(c, g0), fqwe_brute(CyclicCode::from_roots(t, {0, 1})));
        const auto g0b = CyclicCode::from_roots(t, {0, 3, 5, 6}).generator();
        EXPECT_EQ(fqwe_subcode(c, g0b), fqwe_brute(CyclicCode::from_roots(t, {0, 1, 3, 5, 6})));
    }
}

TEST(FqweSubcode, Errors) {
    const auto c = code(5, {1, 4});
    const auto& f = c.field();
    EXPECT_THROW(fqwe_subcode(c, Polynomial(f, {c.zeta(), FieldElement::one(f)})), std::invalid_argument);
    EXPECT_THROW(fqwe_subcode(c, Polynomial::from_integers(f, {1, 0, 1})), std::invalid_argument);
}

TEST(EvenAndExtended, LengthFive) {
    const auto c = code(5, {1, 4});
    EXPECT_EQ(fqwe_even_subcode(c).counts, ints({0, 5, 0, 10, 0, 1}));
    const auto ext = fqwe_extended(c);
    EXPECT_EQ(ext.counts, ints({2, 0, 30, 0, 30, 0, 2}));
    EXPECT_EQ(ext, fqwe_brute_extended(c));
}

TEST(EvenAndExtended, LengthSeventeen) {
    const auto c = code(17, {2, 8, 9, 15});
    EXPECT_EQ(fqwe_even_subcode(c)[9], nt::big_pow(BigInt(2), 8) * nt::binomial(17, 9));
}

TEST(EvenAndExtended, BruteForceAndTotals) {
    for (auto [n, q, r] : {std::tuple{5U, 2ULL, 2U}, {13U, 2ULL, 2U}, {7U, 2ULL, 3U}, {5U, 3ULL, 2U}}) {
        for (const auto& b : enumerate_blocks(make_orbit_table(n, q, r))) {
            const auto c = CyclicCode::from_block(b);
            const auto ev = fqwe_even_subcode(c);
            EXPECT_EQ(ev, fqwe_brute(c.even_subcode()));
            EXPECT_EQ(ev.total(), c.cardinality() / c.symbols().size());
            const auto ext = fqwe_extended(c);
            EXPECT_EQ(ext, fqwe_brute_extended(c));
            EXPECT_EQ(ext.total(), c.cardinality());
        }
    }
}

namespace {

// All x in F^rows with x H = 0, by direct enumeration.
WeightEnumerator nullspace_enumerator(const Matrix& h) {
    const auto& f = h.field();
    const std::size_t n = h.rows();
    WeightEnumerator out(static_cast<std::uint32_t>(n), WeightKind::hamming);
    std::vector<std::uint64_t> digits(n, 0);
    for (;;) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols() && zero; ++j) {
            FieldElement s = FieldElement::zero(f);
            for (std::size_t i = 0; i < n; ++i) s += FieldElement::from_rank(f, digits[i]) * h.at(i, j);
            zero = s.is_zero();
        }
        if (zero) {
            std::uint32_t w = 0;
            for (auto d : digits) w += d != 0;
            out.counts[w] += 1;
        }
        std::size_t i = 0;
        while (i < n && digits[i] == f.order() - 1) digits[i++] = 0;
        if (i == n) break;
        ++digits[i];
    }
    return out;
}

}  // namespace

TEST(RankOracle, ZeroMatrixIsFreeSpace) {
    const auto& f = field_build(3, 1);
    const Matrix h(f, 5, 2);
    const auto e = rank_weight_oracle(h, 3);
    for (std::uint32_t w = 0; w <= 5; ++w) EXPECT_EQ(e[w], nt::binomial(5, w) * nt::big_pow(BigInt(2), w));
}

TEST(RankOracle, IdentityIsZeroWordOnly) {
    const auto& f = field_build(2, 1);
    Matrix h(f, 6, 6);
    for (std::size_t i = 0; i < 6; ++i) h.at(i, i) = FieldElement::one(f);
    EXPECT_EQ(rank_weight_oracle(h, 2).counts, ints({1, 0, 0, 0, 0, 0, 0}));
}

TEST(RankOracle, RandomMatricesMatchNullspace) {
    std::mt19937_64 rng(2024);
    for (auto [p, m, rows] : {std::tuple{2ULL, 1U, 6U}, {2ULL, 1U, 9U}, {3ULL, 1U, 6U}, {2ULL, 2U, 5U}}) {
        const auto& f = field_build(p, m);
        for (int t = 0; t < 5; ++t) {
            Matrix h(f, rows, 3);
            std::uniform_int_distribution<std::uint64_t> el(0, f.order() - 1);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < 3; ++j) h.at(i, j) = FieldElement::from_rank(f, el(rng));
            EXPECT_EQ(rank_weight_oracle(h, f.order()), nullspace_enumerator(h));
        }
    }
}

TEST(RankOracle, TooManyRows) {
    EXPECT_THROW(rank_weight_oracle(Matrix(field_build(2, 1), 21, 1), 2), std::invalid_argument);
}
