#include <gtest/gtest.h>

#include <cmath>

#include "gccodes/structure.hpp"
#include "oracles.hpp"

using namespace gccodes;

namespace {

CyclicCode code(std::uint32_t n, Residues b, std::uint64_t q = 2, unsigned r = 2) {
    return CyclicCode::from_block(Block(std::move(b), make_orbit_table(n, q, r)));
}

std::vector<Block> complete_blocks(std::uint32_t n) {
    BlockFilter f;
    f.complete = true;
    return enumerate_blocks(make_orbit_table(n, 2, 2), f);
}

}  // namespace

TEST(Idempotent, LengthThree) {
    const auto c = code(3, {1});
    const auto& f = c.field();
    const auto w = FieldElement::generator(f);
    const Polynomial expected(f, {FieldElement::zero(f), w * w, w});
    const auto e = idempotent(c);
    EXPECT_EQ(e, expected);
    EXPECT_TRUE(evaluate(e, w).is_zero());
    EXPECT_TRUE(evaluate(e, w * w).is_one());
    EXPECT_TRUE(evaluate(e, FieldElement::one(f)).is_one());
}

TEST(Idempotent, FullAndRepetitionCodes) {
    for (auto [n, q, r] : {std::tuple{5U, 2ULL, 2U}, {7U, 3ULL, 2U}, {13U, 2ULL, 2U}}) {
        auto t = make_orbit_table(n, q, r);
        const auto full = CyclicCode::from_roots(t, {});
        EXPECT_EQ(idempotent(full), Polynomial::one(full.field()));
        Residues nonzero;
        for (std::uint32_t k = 1; k < n; ++k) nonzero.push_back(k);
        const auto rep = CyclicCode::from_roots(t, nonzero);
        const auto& f = rep.field();
        const auto inv_n = FieldElement::constant(f, n).inverse();
        EXPECT_EQ(idempotent(rep), Polynomial(f, std::vector<FieldElement>(n, inv_n)));
    }
}

TEST(Idempotent, ValuesOnRootsOfUnityForAllBlocks) {
    for (auto [n, q, r] : {std::tuple{5U, 2ULL, 2U}, {13U, 2ULL, 2U}, {17U, 2ULL, 2U}, {7U, 2ULL, 3U}, {5U, 3ULL, 2U}}) {
        for (const auto& b : enumerate_blocks(make_orbit_table(n, q, r))) {
            const auto c = CyclicCode::from_block(b);
            const auto e = idempotent(c);
            for (std::uint32_t k = 0; k < n; ++k) {
                const bool root = std::binary_search(c.roots().begin(), c.roots().end(), k);
                const auto v = evaluate(e, c.zeta().pow(k));
                EXPECT_TRUE(root ? v.is_zero() : v.is_one());
            }
            EXPECT_EQ(mod_xn_minus_1(e * e, n), e);
            EXPECT_EQ(gcd(e, Polynomial::xn_minus_1(c.field(), n)), c.generator());
        }
    }
}

TEST(QuaternaryDual, LengthThree) {
    const Block b({1}, make_orbit_table(3, 2, 2));
    const auto s = quaternary_dual_block(b);
    EXPECT_EQ(s.elements(), (Residues{2}));
    EXPECT_EQ(quaternary_dual_block(s), b.scaled(-2));
    EXPECT_EQ(quaternary_dual_block(s).elements(), (Residues{1}));
}

TEST(QuaternaryDual, QrThirteen) {
    const Block b(quadratic_residues(13), make_orbit_table(13, 2, 2));
    const auto ss = quaternary_dual_block(quaternary_dual_block(b));
    EXPECT_EQ(ss, b.scaled(-1));
    EXPECT_EQ(ss, b);
}

TEST(QuaternaryDual, PowerSumsAreLambdaOrSquare) {
    for (std::uint32_t n : {3U, 5U, 11U, 13U, 17U, 19U}) {
        const auto& f = splitting_field(n, 2, 2);
        const auto zeta_inv = primitive_nth_root(f, n).inverse();
        const auto lambda = quaternary_lambda(f);
        for (const auto& b : complete_blocks(n)) {
            for (std::uint32_t j = 1; j < n; ++j) {
                FieldElement s = FieldElement::zero(f);
                for (auto i : b.elements()) s += zeta_inv.pow(static_cast<std::uint64_t>(i) * j);
                EXPECT_TRUE(s == lambda || s == lambda * lambda) << n << " " << j;
            }
        }
    }
}

TEST(QuaternaryDual, InvolutionAndIdempotentForm) {
    for (std::uint32_t n : {3U, 5U, 11U, 13U, 17U, 19U}) {
        for (const auto& b : complete_blocks(n)) {
            const auto s = quaternary_dual_block(b);
            EXPECT_TRUE(s.is_complete());
            EXPECT_EQ(quaternary_dual_block(s), b.scaled(n % 4 == 1 ? -1 : -2)) << n;
            EXPECT_EQ(quaternary_idempotent_form(s), idempotent(CyclicCode::from_block(b))) << n;
        }
    }
}

TEST(QuaternaryDual, ConjugateLambdaSwapsWithTwice) {
    for (std::uint32_t n : {5U, 13U, 17U}) {
        for (const auto& b : complete_blocks(n)) {
            const auto s = quaternary_dual_block(b);
            const auto sc = quaternary_dual_block(b, LambdaChoice::conjugate);
            EXPECT_EQ(sc, s.scaled(2));
            EXPECT_EQ(quaternary_idempotent_form(sc, LambdaChoice::conjugate), quaternary_idempotent_form(s));
        }
    }
}

TEST(QuaternaryDual, Preconditions) {
    EXPECT_THROW(quaternary_dual_block(Block({2, 8, 9, 15}, make_orbit_table(17, 2, 2))), std::invalid_argument);
    EXPECT_THROW(quaternary_dual_block(Block({1, 3}, make_orbit_table(7, 2, 3))), std::invalid_argument);
    EXPECT_THROW(quaternary_dual_block(Block({1, 2}, make_orbit_table(5, 2, 2))), std::invalid_argument);
}

TEST(DualExtended, Examples) {
    const auto r3 = dual_extended_check(Block({1}, make_orbit_table(3, 2, 2)));
    EXPECT_TRUE(r3.self_dual);
    EXPECT_TRUE(r3.block_criterion);
    const auto r11 = dual_extended_check(Block(quadratic_residues(11), make_orbit_table(11, 2, 2)));
    EXPECT_TRUE(r11.self_dual);
    const auto r13 = dual_extended_check(Block(quadratic_residues(13), make_orbit_table(13, 2, 2)));
    EXPECT_FALSE(r13.self_dual);
    for (const auto& r : {r3, r11, r13}) {
        EXPECT_TRUE(r.orthogonal_to_minus_2b);
        EXPECT_TRUE(r.dimensions_complementary);
    }
}

TEST(DualExtended, AgreesWithBlockCriterionAndOrder) {
    for (std::uint32_t n : {3U, 5U, 11U, 13U, 17U, 19U}) {
        const bool order_criterion = nt::mult_order(2, n) % 4 == 2;
        for (const auto& b : complete_blocks(n)) {
            const auto rep = dual_extended_check(b);
            EXPECT_TRUE(rep.orthogonal_to_minus_2b);
            EXPECT_EQ(rep.self_dual, rep.block_criterion) << n;
            EXPECT_EQ(rep.self_dual, order_criterion) << n;
        }
    }
}

TEST(DualExtended, Preconditions) {
    EXPECT_THROW(dual_extended_check(Block({2, 8, 9, 15}, make_orbit_table(17, 2, 2))), std::invalid_argument);
    EXPECT_THROW(dual_extended_check(Block({1, 4}, make_orbit_table(5, 3, 2))), std::invalid_argument);
    EnumOptions tiny;
    tiny.guard = 4;
    EXPECT_THROW(dual_extended_check(Block(quadratic_residues(13), make_orbit_table(13, 2, 2)), tiny), GuardExceeded);
}

TEST(Affine, MinusOneOneIsReversal) {
    for (std::size_t n : {1U, 2U, 5U, 13U}) {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
        std::vector<int> rev(v.rbegin(), v.rend());
        EXPECT_EQ(apply_affine(v, -1, 1), rev);
    }
}

TEST(Affine, IsAPermutationAndComposes) {
    std::vector<int> v(11);
    for (int i = 0; i < 11; ++i) v[i] = i;
    for (int a : {1, 2, 3, 5, 10})
        for (int b : {0, 1, 7}) {
            auto u = apply_affine(v, a, b);
            std::sort(u.begin(), u.end());
            EXPECT_EQ(u, v);
        }
    EXPECT_EQ(apply_affine(apply_affine(v, 2, 0), 6, 0), v);  // 2 * 6 = 1 mod 11
    EXPECT_EQ(apply_affine(v, 1, 1)[1], v[0]);
    EXPECT_THROW(apply_affine(std::vector<int>(12), 4, 0), std::invalid_argument);
}

TEST(Affine, ShiftIsCyclicAutomorphism) {
    const auto c = code(13, quadratic_residues(13));
    for (int b = 0; b < 13; ++b) EXPECT_TRUE(is_automorphism(c, 1, b));
}

TEST(Affine, QrThirteenExamples) {
    const auto c = code(13, quadratic_residues(13));
    EXPECT_TRUE(is_automorphism(c, 3, 0));
    EXPECT_FALSE(is_automorphism(c, 2, 0));
}

TEST(Affine, StabilizerGivesAutomorphisms) {
    for (std::uint32_t n : {5U, 11U, 13U, 17U}) {
        auto t = make_orbit_table(n, 2, 2);
        for (const auto& b : enumerate_blocks(t)) {
            const auto c = CyclicCode::from_block(b);
            const auto stab = block_stabilizer(*t, b.elements());
            for (std::uint32_t a = 1; a < n; ++a) {
                const bool in_stab = std::find(stab.begin(), stab.end(), a) != stab.end();
                for (int shift : {0, 3})
                    EXPECT_EQ(is_automorphism(c, a, shift), in_stab) << n << " " << a;
            }
            EXPECT_EQ(is_automorphism(c, -1, 1), b.is_reversible());
        }
    }
}

TEST(MinDistance, PublishedValues) {
    EXPECT_EQ(min_distance(code(13, quadratic_residues(13))), 5U);
    EXPECT_EQ(min_distance(code(17, {2, 6, 7, 8, 9, 10, 11, 15})), 7U);
    EXPECT_EQ(min_distance(code(17, {2, 8, 9, 15})), 4U);
}

TEST(MinDistance, MatchesNaiveOracle) {
    for (auto [n, q, r] : {std::tuple{5U, 2ULL, 2U}, {11U, 2ULL, 2U}, {13U, 2ULL, 2U}, {7U, 2ULL, 3U}, {5U, 3ULL, 2U}}) {
        for (const auto& b : enumerate_blocks(make_orbit_table(n, q, r))) {
            const auto c = CyclicCode::from_block(b);
            if (c.cardinality() > 20000) continue;
            EXPECT_EQ(*min_distance(c), oracle::min_distance(c)) << n;
        }
    }
}

TEST(MinDistance, ZeroCodeAndGuard) {
    auto t = make_orbit_table(5, 2, 2);
    EXPECT_FALSE(min_distance(CyclicCode::from_roots(t, {0, 1, 2, 3, 4})).has_value());
    EnumOptions tiny;
    tiny.guard = 10;
    EXPECT_THROW(min_distance(code(13, quadratic_residues(13)), tiny), GuardExceeded);
}

TEST(OddType, WeightBoundOnCompleteCodes) {
    for (std::uint32_t n : {3U, 5U, 11U, 13U, 17U}) {
        for (const auto& b : complete_blocks(n)) {
            const auto c = CyclicCode::from_block(b);
            const auto wmin = min_weight_odd_type(c);
            ASSERT_TRUE(wmin.has_value());
            EXPECT_GE(static_cast<std::uint64_t>(*wmin) * *wmin, n) << n;
        }
    }
    const auto c8 = code(7, {1, 3}, 2, 3);
    EXPECT_GE(std::pow(*min_weight_odd_type(c8), 3), 7.0);
}

TEST(OddType, Preconditions) {
    EXPECT_THROW(min_weight_odd_type(code(17, {2, 8, 9, 15})), std::invalid_argument);
    EXPECT_THROW(min_weight_odd_type(CyclicCode::from_roots(make_orbit_table(3, 2, 2), {1, 2})), std::invalid_argument);
}
