#pragma once

// Compact symbols for the subfield GF(q^r) of a splitting field F.
//
// Codeword coordinates are elements of F that happen to lie in GF(q^r). For
// enumeration they are stored as small integer indices: index = sum of
// d_l * p^l where (d_l) are the GF(p)-coordinates in the basis
//   eta^i * theta^j,  l = i + e*j,  0 <= i < e, 0 <= j < r,
// with q = p^e, eta the canonical primitive element of GF(q) and theta the
// canonical primitive element of GF(q^r). Because the first e basis vectors
// span GF(q), a symbol lies in GF(q) exactly when its index is below q, and
// addition is digitwise mod p (XOR when p = 2).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "field.hpp"

namespace gccodes {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

class SymbolCodec {
public:
    static constexpr std::uint64_t kMaxSymbols = std::uint64_t{1} << 20U;

    SymbolCodec(const FieldSpec& field, std::uint64_t q, unsigned r) : field_(&field), q_(q), r_(r) {
        const auto pp = nt::prime_power(q);
        if (!pp.valid() || pp.prime != field.characteristic())
            throw std::invalid_argument("SymbolCodec: q is not a power of the field characteristic");
        p_ = pp.prime;
        e_ = pp.exponent;
        digits_ = e_ * r;
        if (field.degree() % digits_ != 0) throw std::invalid_argument("SymbolCodec: GF(q^r) is not a subfield");
        size_ = nt::checked_pow(q, r);
        if (size_ > kMaxSymbols) throw std::invalid_argument("SymbolCodec: GF(q^r) too large for symbol tables");

        const FieldElement eta = primitive_nth_root(field, q - 1);
        theta_ = primitive_nth_root(field, size_ - 1);
        std::vector<FieldElement> basis;
        for (unsigned j = 0; j < r; ++j)
            for (unsigned i = 0; i < e_; ++i) basis.push_back(eta.pow(i) * theta_.pow(j));

        elements_.reserve(size_);
        ranks_.reserve(size_);
        for (std::uint64_t idx = 0; idx < size_; ++idx) {
            FieldElement x = FieldElement::zero(field);
            std::uint64_t rest = idx;
            for (unsigned l = 0; l < digits_; ++l) {
                const auto d = rest % p_;
                rest /= p_;
                if (d != 0) x += FieldElement::constant(field, static_cast<std::int64_t>(d)) * basis[l];
            }
            ranks_.push_back(x.rank());
            index_.emplace(x.rank(), static_cast<Symbol>(idx));
            elements_.push_back(std::move(x));
        }
        if (index_.size() != size_) throw std::logic_error("SymbolCodec: basis is not independent");

        frobenius_.resize(size_);
        for (std::uint64_t idx = 0; idx < size_; ++idx) frobenius_[idx] = index_of(elements_[idx].pow(q));
        if (size_ <= 256) {
            mul_.resize(size_ * size_);
            for (std::uint64_t a = 0; a < size_; ++a)
                for (std::uint64_t b = 0; b < size_; ++b) mul_[a * size_ + b] = index_of(elements_[a] * elements_[b]);
        }
    }

    const FieldSpec& field() const noexcept { return *field_; }
    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t q() const noexcept { return q_; }
    unsigned r() const noexcept { return r_; }
    /// q = p^e.
    unsigned e() const noexcept { return e_; }
    /// Number of GF(p) digits per symbol, e * r.
    unsigned digits() const noexcept { return digits_; }
    /// q^r.
    std::uint64_t size() const noexcept { return size_; }
    /// The canonical primitive element of GF(q^r); for GF(4) this is the symbol "w".
    const FieldElement& theta() const noexcept { return theta_; }

    const FieldElement& element(Symbol s) const { return elements_.at(s); }
    /// Canonical rank in the splitting field.
    std::uint64_t rank(Symbol s) const { return ranks_.at(s); }

    Symbol index_of(const FieldElement& x) const {
        if (&x.field() != field_) throw std::invalid_argument("SymbolCodec: element from another field");
        auto it = index_.find(x.rank());
        if (it == index_.end()) throw std::invalid_argument("SymbolCodec: element not in GF(q^r)");
        return it->second;
    }
    bool contains(const FieldElement& x) const { return &x.field() == field_ && index_.count(x.rank()) != 0; }

    bool in_base(Symbol s) const noexcept { return s < q_; }

    Symbol add(Symbol a, Symbol b) const noexcept {
        if (p_ == 2) return a ^ b;
        Symbol out = 0;
        std::uint64_t scale = 1;
        for (unsigned l = 0; l < digits_; ++l) {
            out += static_cast<Symbol>(((a % p_) + (b % p_)) % p_ * scale);
            a /= static_cast<Symbol>(p_);
            b /= static_cast<Symbol>(p_);
            scale *= p_;
        }
        return out;
    }
    Symbol neg(Symbol a) const noexcept {
        if (p_ == 2) return a;
        Symbol out = 0;
        std::uint64_t scale = 1;
        for (unsigned l = 0; l < digits_; ++l) {
            out += static_cast<Symbol>((p_ - a % p_) % p_ * scale);
            a /= static_cast<Symbol>(p_);
            scale *= p_;
        }
        return out;
    }
    Symbol sub(Symbol a, Symbol b) const noexcept { return add(a, neg(b)); }
    Symbol mul(Symbol a, Symbol b) const {
        if (!mul_.empty()) return mul_[a * size_ + b];
        return index_of(elements_.at(a) * elements_.at(b));
    }
    /// s^q.
    Symbol frobenius(Symbol s) const { return frobenius_.at(s); }
    /// psi(s) = s^q - s.
    Symbol psi(Symbol s) const { return sub(frobenius(s), s); }

    /// GF(p)-digit l of a symbol.
    std::uint64_t digit(Symbol s, unsigned l) const noexcept {
        for (unsigned i = 0; i < l; ++i) s /= static_cast<Symbol>(p_);
        return s % p_;
    }
    /// Symbol of the l-th basis vector, p^l.
    Symbol basis_symbol(unsigned l) const noexcept { return static_cast<Symbol>(nt::checked_pow(p_, l)); }

private:
    const FieldSpec* field_;
    std::uint64_t q_;
    unsigned r_;
    std::uint64_t p_ = 0;
    unsigned e_ = 0;
    unsigned digits_ = 0;
    std::uint64_t size_ = 0;
    FieldElement theta_;
    std::vector<FieldElement> elements_;
    std::vector<std::uint64_t> ranks_;
    std::unordered_map<std::uint64_t, Symbol> index_;
    std::vector<Symbol> frobenius_;
    std::vector<Symbol> mul_;
};

}  // namespace gccodes
