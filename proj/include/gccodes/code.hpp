#pragma once

// Cyclic codes of length n over GF(q^r), realized inside the splitting field
// F of x^n - 1 over GF(q^r). A code is determined by its root set
// B subset Z/nZ (with q^r B = B): g(x) = prod_{k in B} (x - zeta^k) where zeta
// is the canonical primitive n-th root of unity of F.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "cyclotomic.hpp"
#include "polynomial.hpp"
#include "symbols.hpp"

namespace gccodes {

enum class WeightKind { hamming, fq_weight, psi_image };

inline const char* to_string(WeightKind k) {
    switch (k) {
        case WeightKind::hamming: return "hamming";
        case WeightKind::fq_weight: return "fq_weight";
        case WeightKind::psi_image: return "psi_image";
    }
    return "?";
}

/// Exact counts b_0..b_n.
struct WeightEnumerator {
    std::uint32_t n = 0;
    std::vector<BigInt> counts;
    WeightKind kind = WeightKind::hamming;

    WeightEnumerator() = default;
    WeightEnumerator(std::uint32_t length, WeightKind k) : n(length), counts(length + 1, 0), kind(k) {}

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }
    const BigInt& operator[](std::size_t w) const { return counts.at(w); }

    friend bool operator==(const WeightEnumerator& a, const WeightEnumerator& b) {
        return a.n == b.n && a.kind == b.kind && a.counts == b.counts;
    }
};

/// Degree of the splitting field of x^n - 1 over GF(q^r), as an extension of GF(p).
inline unsigned splitting_degree(std::uint32_t n, std::uint64_t q, unsigned r) {
    const auto pp = nt::prime_power(q);
    if (!pp.valid()) throw std::invalid_argument("splitting_degree: q is not a prime power");
    const std::uint64_t t = nt::mult_order(nt::powmod(q, r, n), n);
    return static_cast<unsigned>(pp.exponent * r * t);
}

inline const FieldSpec& splitting_field(std::uint32_t n, std::uint64_t q, unsigned r) {
    return field_build(nt::prime_power(q).prime, splitting_degree(n, q, r));
}

/// Shared codec for GF(q^r) inside a given field.
inline std::shared_ptr<const SymbolCodec> symbol_codec(const FieldSpec& field, std::uint64_t q, unsigned r) {
    static std::mutex mutex;
    static std::map<std::tuple<const FieldSpec*, std::uint64_t, unsigned>, std::shared_ptr<const SymbolCodec>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{&field, q, r}];
    if (!slot) slot = std::make_shared<const SymbolCodec>(field, q, r);
    return slot;
}

/// True iff gcd(g, g^(sigma^i)) = 1 for 1 <= i < r, where sigma is c -> c^q.
inline bool is_galois_coprime(const Polynomial& g, std::uint64_t q, unsigned r, std::uint32_t n) {
    if (!divides(g, Polynomial::xn_minus_1(g.field(), n)))
        throw std::invalid_argument("is_galois_coprime: g does not divide x^n - 1");
    for (unsigned i = 1; i < r; ++i)
        if (gcd(g, sigma_pow(g, q, i)).degree() != 0) return false;
    return true;
}

class CyclicCode {
public:
    /// Code C_B of a valid q^r-block.
    static CyclicCode from_block(const Block& block) {
        const auto check = block.check();
        if (!check) throw std::invalid_argument("CyclicCode::from_block: invalid block (" + check.reason + ")");
        CyclicCode c = from_roots(block.table_ptr(), block.elements());
        c.block_ = block;
        return c;
    }

    /// Code whose generator has the roots zeta^k, k in roots; roots must be q^r-invariant.
    static CyclicCode from_roots(const OrbitTablePtr& table, Residues roots) {
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        for (auto k : roots)
            if (k >= table->n()) throw std::invalid_argument("CyclicCode: root index outside Z/nZ");
        const auto qr = static_cast<std::int64_t>(nt::powmod(table->q(), table->r(), table->n()));
        if (table->scale(roots, qr) != roots) throw std::invalid_argument("CyclicCode: root set is not q^r-invariant");

        const FieldSpec& field = splitting_field(table->n(), table->q(), table->r());
        const FieldElement zeta = primitive_nth_root(field, table->n());
        Polynomial g = Polynomial::one(field);
        const FieldElement one = FieldElement::one(field);
        for (auto k : roots) g = g * Polynomial(field, {-zeta.pow(k), one});
        return CyclicCode(table, std::move(roots), zeta, std::move(g));
    }

    /// Code with an explicit generator over splitting_field(n, q, r).
    static CyclicCode from_generator(std::uint32_t n, std::uint64_t q, unsigned r, const Polynomial& generator) {
        auto table = make_orbit_table(n, q, r);
        const FieldSpec& field = splitting_field(n, q, r);
        if (&generator.field() != &field) throw std::invalid_argument("CyclicCode: generator not over the splitting field");
        if (generator.is_zero()) throw std::invalid_argument("CyclicCode: zero generator");
        const Polynomial g = generator.monic();
        if (!divides(g, Polynomial::xn_minus_1(field, n))) throw std::invalid_argument("CyclicCode: g does not divide x^n - 1");
        const FieldElement zeta = primitive_nth_root(field, n);
        Residues roots;
        for (std::uint32_t k = 0; k < n; ++k)
            if (evaluate(g, zeta.pow(k)).is_zero()) roots.push_back(k);
        return CyclicCode(table, std::move(roots), zeta, g);
    }

    std::uint32_t n() const noexcept { return table_->n(); }
    std::uint64_t q() const noexcept { return table_->q(); }
    unsigned r() const noexcept { return table_->r(); }
    const OrbitTable& table() const noexcept { return *table_; }
    const OrbitTablePtr& table_ptr() const noexcept { return table_; }
    const std::optional<Block>& block() const noexcept { return block_; }
    /// Exponents k with g(zeta^k) = 0, sorted.
    const Residues& roots() const noexcept { return roots_; }
    const Polynomial& generator() const noexcept { return generator_; }
    std::size_t dimension() const noexcept { return n() - roots_.size(); }
    const FieldSpec& field() const noexcept { return generator_.field(); }
    const FieldElement& zeta() const noexcept { return zeta_; }
    const SymbolCodec& symbols() const noexcept { return *codec_; }
    std::shared_ptr<const SymbolCodec> symbols_ptr() const noexcept { return codec_; }
    /// |C| = (q^r)^dim.
    BigInt cardinality() const { return nt::big_pow(BigInt(codec_->size()), static_cast<unsigned>(dimension())); }

    bool is_galois_supplemented() const { return is_galois_coprime(generator_, q(), r(), n()); }

    /// The r conjugate root sets q^k B partition Z/nZ \ {0}.
    bool is_complete() const {
        std::vector<int> hits(n(), 0);
        Residues t = roots_;
        for (unsigned k = 0; k < r(); ++k) {
            for (auto x : t) ++hits[x];
            t = table_->scale(t, static_cast<std::int64_t>(q() % n()));
        }
        if (hits[0] != 0) return false;
        return std::all_of(hits.begin() + 1, hits.end(), [](int h) { return h == 1; });
    }
    bool is_reversible() const { return table_->scale(roots_, -1) == roots_; }

    /// Generator of the even weight subcode, (x - 1) g.
    CyclicCode even_subcode() const {
        if (std::binary_search(roots_.begin(), roots_.end(), 0U))
            throw std::invalid_argument("even_subcode: g(1) = 0, the code has no proper even weight subcode");
        Residues r = roots_;
        r.push_back(0);
        return from_roots(table_, std::move(r));
    }

    Word to_word(const Polynomial& f) const {
        const Polynomial reduced = mod_xn_minus_1(f, n());
        Word w(n(), 0);
        for (std::size_t i = 0; i < reduced.coeffs().size(); ++i) w[i] = codec_->index_of(reduced.coeffs()[i]);
        return w;
    }
    Polynomial to_polynomial(const Word& w) const {
        std::vector<FieldElement> c;
        c.reserve(w.size());
        for (auto s : w) c.push_back(codec_->element(s));
        return {field(), std::move(c)};
    }
    bool contains(const Word& w) const {
        if (w.size() != n()) return false;
        return divides(generator_, to_polynomial(w));
    }

    /// x^i g for 0 <= i < dim: a GF(q^r)-basis.
    std::vector<Word> basis() const {
        std::vector<Word> out;
        const FieldElement one = FieldElement::one(field());
        for (std::size_t i = 0; i < dimension(); ++i) out.push_back(to_word(Polynomial::monomial(one, i) * generator_));
        return out;
    }

    /// beta_l x^i g over the GF(p)-basis beta_l of GF(q^r): a GF(p)-basis.
    std::vector<Word> fp_generators() const { return expand_to_fp(basis()); }

    /// Scales every word by every GF(p)-basis symbol of GF(q^r).
    std::vector<Word> expand_to_fp(const std::vector<Word>& words) const {
        std::vector<Word> out;
        for (const auto& w : words)
            for (unsigned l = 0; l < codec_->digits(); ++l) {
                Word s(w.size());
                const Symbol beta = codec_->basis_symbol(l);
                for (std::size_t i = 0; i < w.size(); ++i) s[i] = codec_->mul(beta, w[i]);
                out.push_back(std::move(s));
            }
        return out;
    }

private:
    CyclicCode(OrbitTablePtr table, Residues roots, FieldElement zeta, Polynomial g)
        : table_(std::move(table)), roots_(std::move(roots)), zeta_(std::move(zeta)), generator_(std::move(g)) {
        const FieldSpec& f = generator_.field();
        const unsigned sub = nt::prime_power(q()).exponent * r();
        if (!coefficients_in_subfield(generator_, sub))
            throw std::logic_error("CyclicCode: generator coefficients not in GF(q^r)");
        if (!divides(generator_, Polynomial::xn_minus_1(f, n())))
            throw std::logic_error("CyclicCode: generator does not divide x^n - 1");
        codec_ = symbol_codec(f, q(), r());
    }

    OrbitTablePtr table_;
    Residues roots_;
    FieldElement zeta_;
    Polynomial generator_;
    std::optional<Block> block_;
    std::shared_ptr<const SymbolCodec> codec_;
};

}  // namespace gccodes
