#pragma once

// Structural properties of cyclic codes: idempotent generators, the
// quaternary block duality B -> B*, duality of extended codes, affine
// automorphisms and minimum weights.

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "code.hpp"
#include "enumerate.hpp"

namespace gccodes {

/// The idempotent e of degree < n generating C: e(zeta^k) = 0 for roots k
/// and 1 elsewhere. The result is checked (e^2 = e mod x^n - 1 and
/// gcd(e, x^n - 1) = g) before it is returned.
inline Polynomial idempotent(const CyclicCode& code) {
    const FieldSpec& field = code.field();
    const std::uint32_t n = code.n();
    const FieldElement n_inv = FieldElement::constant(field, n).inverse();
    const FieldElement zeta_inv = code.zeta().inverse();

    std::vector<FieldElement> c(n, FieldElement::zero(field));
    c[0] = FieldElement::constant(field, static_cast<std::int64_t>(code.dimension())) * n_inv;
    for (std::uint32_t j = 1; j < n; ++j) {
        FieldElement sum = FieldElement::zero(field);
        for (auto k : code.roots()) sum += zeta_inv.pow(static_cast<std::uint64_t>(k) * j);
        c[j] = -(sum * n_inv);
    }
    Polynomial e(field, std::move(c));

    const unsigned sub = code.symbols().e() * code.r();
    if (!coefficients_in_subfield(e, sub)) throw std::logic_error("idempotent: coefficients outside GF(q^r)");
    if (mod_xn_minus_1(e * e, n) != e) throw std::logic_error("idempotent: e^2 != e");
    if (gcd(e, Polynomial::xn_minus_1(field, n)) != code.generator())
        throw std::logic_error("idempotent: e does not generate the code");
    return e;
}

enum class LambdaChoice { canonical, conjugate };

/// lambda in GF(4) \ GF(2) inside the code's splitting field.
inline FieldElement quaternary_lambda(const FieldSpec& field, LambdaChoice choice = LambdaChoice::canonical) {
    const FieldElement w = primitive_nth_root(field, 3);
    return choice == LambdaChoice::canonical ? w : w * w;
}

namespace detail {
inline void require_complete_quaternary(const Block& block, const char* what) {
    const auto& t = block.table();
    if (t.q() != 2 || t.r() != 2) throw std::invalid_argument(std::string(what) + ": requires q = 2, r = 2");
    const auto check = block.check();
    if (!check) throw std::invalid_argument(std::string(what) + ": invalid block (" + check.reason + ")");
    if (!block.is_complete()) throw std::invalid_argument(std::string(what) + ": block is not complete");
}
}  // namespace detail

/// B* = {1 <= j <= n-1 : sum_{i in B} zeta^(-ij) = lambda} for a complete 2^2-block.
inline Block quaternary_dual_block(const Block& block, LambdaChoice choice = LambdaChoice::canonical) {
    detail::require_complete_quaternary(block, "quaternary_dual_block");
    const std::uint32_t n = block.table().n();
    const FieldSpec& field = splitting_field(n, 2, 2);
    const FieldElement zeta_inv = primitive_nth_root(field, n).inverse();
    const FieldElement lambda = quaternary_lambda(field, choice);
    const FieldElement lambda2 = lambda * lambda;

    Residues dual;
    for (std::uint32_t j = 1; j < n; ++j) {
        FieldElement sum = FieldElement::zero(field);
        for (auto i : block.elements()) sum += zeta_inv.pow(static_cast<std::uint64_t>(i) * j);
        if (sum == lambda)
            dual.push_back(j);
        else if (sum != lambda2)
            throw std::logic_error("quaternary_dual_block: power sum outside {lambda, lambda^2}");
    }
    Block out(std::move(dual), block.table_ptr());
    if (!out.is_valid() || !out.is_complete()) throw std::logic_error("quaternary_dual_block: B* is not a complete block");
    return out;
}

/// (n+1)/2 + lambda sum_{j in B*} x^j + lambda^2 sum_{j in 2B*} x^j, with (n+1)/2 read in GF(2).
inline Polynomial quaternary_idempotent_form(const Block& dual, LambdaChoice choice = LambdaChoice::canonical) {
    const std::uint32_t n = dual.table().n();
    const FieldSpec& field = splitting_field(n, 2, 2);
    const FieldElement lambda = quaternary_lambda(field, choice);
    std::vector<FieldElement> c(n, FieldElement::zero(field));
    c[0] = FieldElement::constant(field, ((n + 1) / 2) % 2);
    for (auto j : dual.elements()) c[j] += lambda;
    for (auto j : dual.table().scale(dual.elements(), 2)) c[j] += lambda * lambda;
    return {field, std::move(c)};
}

struct DualityReport {
    /// Every basis word of the extended C_B is orthogonal to every basis word of the extended C_{-2B}.
    bool orthogonal_to_minus_2b = false;
    /// dim + dim' = n + 1, so together with orthogonality the two are duals.
    bool dimensions_complementary = false;
    /// The extended C_B is self-orthogonal with dimension (n+1)/2.
    bool self_dual = false;
    /// B = -2B.
    bool block_criterion = false;
};

inline std::vector<Word> extended_basis(const CyclicCode& code) {
    const auto& codec = code.symbols();
    std::vector<Word> out = code.basis();
    for (auto& w : out) {
        Symbol sum = 0;
        for (Symbol s : w) sum = codec.add(sum, s);
        w.push_back(codec.neg(sum));
    }
    return out;
}

inline Symbol dot(const SymbolCodec& codec, const Word& a, const Word& b) {
    Symbol acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = codec.add(acc, codec.mul(a[i], b[i]));
    return acc;
}

/// Checks the duality of extended codes for a complete q^2-block, q a power of 2,
/// by inner products of basis words.
inline DualityReport dual_extended_check(const Block& block, const EnumOptions& opts = {}) {
    const auto& t = block.table();
    if (nt::prime_power(t.q()).prime != 2 || t.r() != 2)
        throw std::invalid_argument("dual_extended_check: requires q a power of 2 and r = 2");
    if (!block.is_valid() || !block.is_complete()) throw std::invalid_argument("dual_extended_check: block must be complete");

    const CyclicCode c = CyclicCode::from_block(block);
    const CyclicCode c2 = CyclicCode::from_block(block.scaled(-2));
    const auto basis = extended_basis(c);
    const auto basis2 = extended_basis(c2);
    const BigInt pairs = BigInt(basis.size()) * std::max(basis.size(), basis2.size());
    if (pairs > opts.guard) throw GuardExceeded(pairs, opts.guard);

    const auto& codec = c.symbols();
    DualityReport rep;
    rep.orthogonal_to_minus_2b = true;
    for (const auto& u : basis)
        for (const auto& v : basis2)
            if (dot(codec, u, v) != 0) rep.orthogonal_to_minus_2b = false;
    rep.dimensions_complementary = c.dimension() + c2.dimension() == c.n() + 1;
    bool self_orth = true;
    for (const auto& u : basis)
        for (const auto& v : basis)
            if (dot(codec, u, v) != 0) self_orth = false;
    rep.self_dual = self_orth && 2 * c.dimension() == c.n() + 1;
    rep.block_criterion = block.scaled(-2) == block;
    return rep;
}

/// Coordinate permutation x -> a x + b on Z/nZ with coordinates labelled 1..n
/// (label n is 0 mod n): the symbol at label j moves to label a j + b.
/// With this labelling, (a, b) = (-1, 1) is the reversal of the word.
template <class T>
std::vector<T> apply_affine(const std::vector<T>& word, std::int64_t a, std::int64_t b) {
    const auto n = static_cast<std::int64_t>(word.size());
    if (n == 0) return word;
    if (std::gcd(((a % n) + n) % n, n) != 1) throw std::invalid_argument("apply_affine: a is not invertible mod n");
    std::vector<T> out(word.size());
    for (std::int64_t label = 1; label <= n; ++label) {
        const std::int64_t target = (((a * label + b) % n) + n) % n;  // label mod n
        const std::int64_t pos = (target + n - 1) % n;
        out[static_cast<std::size_t>(pos)] = word[static_cast<std::size_t>(label - 1)];
    }
    return out;
}

/// Units a mod n with a B = B.
inline std::vector<std::uint32_t> block_stabilizer(const OrbitTable& table, const Residues& set) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t a = 1; a < table.n(); ++a)
        if (std::gcd(a, table.n()) == 1 && table.scale(set, a) == set) out.push_back(a);
    return out;
}

/// True iff pi_{a,b} maps every basis word back into the code.
inline bool is_automorphism(const CyclicCode& code, std::int64_t a, std::int64_t b, const EnumOptions& opts = {}) {
    if (BigInt(code.dimension()) > opts.guard) throw GuardExceeded(code.dimension(), opts.guard);
    for (const auto& w : code.basis())
        if (!code.contains(apply_affine(w, a, b))) return false;
    return true;
}

/// Minimum Hamming weight of a nonzero codeword; nullopt for the zero code.
inline std::optional<std::uint32_t> min_distance(const CyclicCode& code, const EnumOptions& opts = {}) {
    if (code.dimension() == 0) return std::nullopt;
    const SpanEnumerator span(code.symbols(), code.n(), code.fp_generators());
    constexpr auto none = std::numeric_limits<std::uint32_t>::max();
    const auto d = span.reduce(
        opts, [] { return none; },
        [](std::uint32_t& best, const auto& v) {
            const auto w = v.hamming_weight();
            if (w != 0 && w < best) best = w;
        },
        [](std::uint32_t& into, std::uint32_t from) { into = std::min(into, from); });
    return d;
}

/// Minimum weight over words whose coordinate sum is nonzero, for complete
/// Galois supplemented codes; nullopt if there is no such word.
inline std::optional<std::uint32_t> min_weight_odd_type(const CyclicCode& code, const EnumOptions& opts = {}) {
    if (!code.is_galois_supplemented() || !code.is_complete())
        throw std::invalid_argument("min_weight_odd_type: code must be complete Galois supplemented");
    const SpanEnumerator span(code.symbols(), code.n(), code.fp_generators());
    constexpr auto none = std::numeric_limits<std::uint32_t>::max();
    const auto d = span.reduce(
        opts, [] { return none; },
        [](std::uint32_t& best, const auto& v) {
            if (v.coordinate_sum_nonzero()) best = std::min(best, v.hamming_weight());
        },
        [](std::uint32_t& into, std::uint32_t from) { into = std::min(into, from); });
    if (d == none) return std::nullopt;
    return d;
}

}  // namespace gccodes
