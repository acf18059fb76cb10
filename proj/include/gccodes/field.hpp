#pragma once

// Exact arithmetic in GF(p^M).
//
// A field is a residue ring GF(p)[x]/(f) where f is the first monic
// irreducible polynomial of degree M when candidates are ordered by their
// low coefficients read as a base-p integer (c_0 least significant). Fields
// are interned: field_build(p, M) always returns the same object, so
// elements compare their owner by address.
//
// Elements are dense residue vectors. There are no log/antilog tables, which
// keeps construction cheap for splitting fields of a few dozen bits.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "number_theory.hpp"

namespace gccodes {

class FieldSpec;
const FieldSpec& field_build(std::uint64_t p, unsigned degree);

namespace detail {

// Dense polynomials over the prime field GF(p), index i = coefficient of x^i.
using PrimePoly = std::vector<std::uint64_t>;

inline void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PrimePoly prime_poly_mod(PrimePoly a, const PrimePoly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = nt::powmod(m.back(), p - 2, p);
    while (a.size() > dm) {
        const std::uint64_t c = nt::mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + p - nt::mulmod(c, m[i], p)) % p;
        trim(a);
    }
    return a;
}

inline PrimePoly prime_poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + nt::mulmod(a[i], b[j], p)) % p;
    return prime_poly_mod(std::move(prod), m, p);
}

inline PrimePoly prime_poly_powmod(PrimePoly base, std::uint64_t e, const PrimePoly& m, std::uint64_t p) {
    PrimePoly result{1};
    base = prime_poly_mod(std::move(base), m, p);
    while (e != 0) {
        if (e & 1U) result = prime_poly_mulmod(result, base, m, p);
        base = prime_poly_mulmod(base, base, m, p);
        e >>= 1U;
    }
    return result;
}

inline PrimePoly prime_poly_gcd(PrimePoly a, PrimePoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = prime_poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// x^(p^k) mod m, by k successive p-th powers.
inline PrimePoly x_pow_p_pow(unsigned k, const PrimePoly& m, std::uint64_t p) {
    PrimePoly h = prime_poly_mod(PrimePoly{0, 1}, m, p);
    for (unsigned i = 0; i < k; ++i) h = prime_poly_powmod(h, p, m, p);
    return h;
}

/// Rabin's irreducibility test for a monic f of degree m over GF(p).
inline bool rabin_irreducible(const PrimePoly& f, std::uint64_t p) {
    const auto m = static_cast<unsigned>(f.size() - 1);
    if (m == 1) return true;
    PrimePoly x = prime_poly_mod(PrimePoly{0, 1}, f, p);
    PrimePoly full = x_pow_p_pow(m, f, p);
    if (full != x) return false;
    for (std::uint64_t l : nt::prime_factors(m)) {
        PrimePoly h = x_pow_p_pow(m / static_cast<unsigned>(l), f, p);
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        auto g = prime_poly_gcd(h, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

/// GF(p^M) with its canonical modulus. Obtain instances through field_build().
class FieldSpec {
public:
    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return degree_; }
    /// Number of elements p^M.
    std::uint64_t order() const noexcept { return order_; }
    /// Monic modulus, degree() + 1 coefficients, lowest degree first.
    std::span<const std::uint64_t> modulus() const noexcept { return modulus_; }

private:
    friend const FieldSpec& field_build(std::uint64_t, unsigned);

    FieldSpec(std::uint64_t p, unsigned degree, std::vector<std::uint64_t> modulus)
        : p_(p), degree_(degree), order_(nt::checked_pow(p, degree)), modulus_(std::move(modulus)) {}

    std::uint64_t p_;
    unsigned degree_;
    std::uint64_t order_;
    std::vector<std::uint64_t> modulus_;
};

/// Canonical GF(p^M). Throws std::invalid_argument when p is not prime, M = 0
/// or p^M does not fit in 63 bits.
inline const FieldSpec& field_build(std::uint64_t p, unsigned degree) {
    if (!nt::is_prime(p)) throw std::invalid_argument("field_build: characteristic " + std::to_string(p) + " is not prime");
    if (degree == 0) throw std::invalid_argument("field_build: extension degree must be positive");
    {
        std::uint64_t order = 1;
        for (unsigned i = 0; i < degree; ++i) {
            if (order > (std::uint64_t{1} << 63U) / p) throw std::invalid_argument("field_build: field order exceeds 2^63");
            order *= p;
        }
    }

    static std::mutex mutex;
    static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FieldSpec>> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[{p, degree}];
    if (!slot) {
        detail::PrimePoly candidate(degree + 1, 0);
        candidate[degree] = 1;
        for (;;) {
            if (detail::rabin_irreducible(candidate, p)) break;
            // Next candidate: increment the low coefficients as a base-p counter.
            std::size_t i = 0;
            while (i < degree && candidate[i] == p - 1) candidate[i++] = 0;
            if (i == degree) throw std::logic_error("field_build: no irreducible polynomial found");
            ++candidate[i];
        }
        slot.reset(new FieldSpec(p, degree, candidate));
    }
    return *slot;
}

/// Element of a FieldSpec; value type holding M residues modulo p.
class FieldElement {
public:
    FieldElement() = default;
    explicit FieldElement(const FieldSpec& field) : field_(&field), coeffs_(field.degree(), 0) {}

    static FieldElement zero(const FieldSpec& field) { return FieldElement(field); }
    static FieldElement one(const FieldSpec& field) { return constant(field, 1); }

    static FieldElement constant(const FieldSpec& field, std::int64_t c) {
        FieldElement out(field);
        const auto p = static_cast<std::int64_t>(field.characteristic());
        out.coeffs_[0] = static_cast<std::uint64_t>(((c % p) + p) % p);
        return out;
    }

    /// Residue class of x.
    static FieldElement generator(const FieldSpec& field) {
        FieldElement out(field);
        if (field.degree() == 1) {
            const auto p = field.characteristic();
            out.coeffs_[0] = (p - field.modulus()[0]) % p;
        } else {
            out.coeffs_[1] = 1;
        }
        return out;
    }

    /// Inverse of rank(): the element whose coefficients are the base-p digits of r.
    static FieldElement from_rank(const FieldSpec& field, std::uint64_t r) {
        if (r >= field.order()) throw std::out_of_range("FieldElement::from_rank: rank outside field");
        FieldElement out(field);
        for (auto& c : out.coeffs_) {
            c = r % field.characteristic();
            r /= field.characteristic();
        }
        return out;
    }

    bool valid() const noexcept { return field_ != nullptr; }
    const FieldSpec& field() const {
        if (!field_) throw std::logic_error("FieldElement: no owning field");
        return *field_;
    }
    std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
    }
    bool is_one() const noexcept {
        if (coeffs_.empty() || coeffs_[0] != 1) return false;
        return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](auto c) { return c == 0; });
    }

    /// Position in the canonical element ordering (coefficients as base-p digits, c_0 lowest).
    std::uint64_t rank() const noexcept {
        std::uint64_t r = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * field_->characteristic() + *it;
        return r;
    }

    FieldElement& operator+=(const FieldElement& o) {
        check_same(o);
        const auto p = field_->characteristic();
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + o.coeffs_[i]) % p;
        return *this;
    }
    FieldElement& operator-=(const FieldElement& o) {
        check_same(o);
        const auto p = field_->characteristic();
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + p - o.coeffs_[i]) % p;
        return *this;
    }
    FieldElement& operator*=(const FieldElement& o) {
        check_same(o);
        *this = multiply(*this, o);
        return *this;
    }
    FieldElement& operator/=(const FieldElement& o) {
        check_same(o);
        *this = multiply(*this, o.inverse());
        return *this;
    }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    FieldElement operator-() const { return zero(field()) - *this; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return a.rank() <=> b.rank();
    }

    FieldElement pow(std::uint64_t e) const {
        FieldElement result = one(field());
        FieldElement base = *this;
        while (e != 0) {
            if (e & 1U) result = multiply(result, base);
            base = multiply(base, base);
            e >>= 1U;
        }
        return result;
    }

    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("FieldElement: division by zero");
        return pow(field_->order() - 2);
    }

private:
    void check_same(const FieldElement& o) const {
        if (field_ == nullptr || field_ != o.field_) throw std::invalid_argument("FieldElement: operands from different fields");
    }

    static FieldElement multiply(const FieldElement& a, const FieldElement& b) {
        const FieldSpec& f = *a.field_;
        const auto p = f.characteristic();
        const std::size_t m = f.degree();
        std::vector<std::uint64_t> prod(2 * m - 1, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                prod[i + j] = (prod[i + j] + nt::mulmod(a.coeffs_[i], b.coeffs_[j], p)) % p;
        }
        const auto mod = f.modulus();
        for (std::size_t d = prod.size(); d-- > m;) {
            const std::uint64_t c = prod[d];
            if (c == 0) continue;
            for (std::size_t i = 0; i < m; ++i)
                prod[d - m + i] = (prod[d - m + i] + p - nt::mulmod(c, mod[i], p)) % p;
            prod[d] = 0;
        }
        FieldElement out(f);
        std::copy_n(prod.begin(), m, out.coeffs_.begin());
        return out;
    }

    const FieldSpec* field_ = nullptr;
    std::vector<std::uint64_t> coeffs_;
};

/// a^(q^i).
inline FieldElement frobenius_pow(const FieldElement& a, std::uint64_t q, std::uint64_t i) {
    const FieldSpec& f = a.field();
    const auto pp = nt::prime_power(q);
    if (pp.valid() && pp.prime == f.characteristic()) {
        // a^(p^M) = a, so only (e*i) mod M p-th powers are needed.
        const std::uint64_t steps = (static_cast<std::uint64_t>(pp.exponent) * (i % f.degree())) % f.degree();
        FieldElement out = a;
        for (std::uint64_t s = 0; s < steps; ++s) out = out.pow(f.characteristic());
        return out;
    }
    FieldElement out = a;
    for (std::uint64_t s = 0; s < i; ++s) out = out.pow(q);
    return out;
}

/// True iff a lies in the subfield of order p^d, i.e. a^(p^d) = a.
inline bool in_subfield(const FieldElement& a, unsigned d) {
    const FieldSpec& f = a.field();
    if (d == 0 || f.degree() % d != 0)
        throw std::invalid_argument("in_subfield: GF(" + std::to_string(f.characteristic()) + "^" + std::to_string(d) +
                                    ") is not a subfield of GF(" + std::to_string(f.characteristic()) + "^" +
                                    std::to_string(f.degree()) + ")");
    return frobenius_pow(a, f.characteristic(), d) == a;
}

/// Relative trace from GF(q^r) down to GF(q); a must lie in GF(q^r).
inline FieldElement relative_trace(const FieldElement& a, std::uint64_t q, unsigned r) {
    const auto pp = nt::prime_power(q);
    if (!pp.valid() || pp.prime != a.field().characteristic())
        throw std::invalid_argument("relative_trace: q is not a power of the characteristic");
    if (!in_subfield(a, pp.exponent * r)) throw std::invalid_argument("relative_trace: element not in GF(q^r)");
    FieldElement sum = FieldElement::zero(a.field());
    FieldElement term = a;
    for (unsigned i = 0; i < r; ++i) {
        sum += term;
        term = term.pow(q);
    }
    return sum;
}

/// True iff a has multiplicative order exactly n.
inline bool has_order(const FieldElement& a, std::uint64_t n) {
    if (a.is_zero() || !a.pow(n).is_one()) return false;
    for (std::uint64_t l : nt::prime_factors(n))
        if (a.pow(n / l).is_one()) return false;
    return true;
}

/// The least element (canonical ordering) of multiplicative order exactly n.
inline FieldElement primitive_nth_root(const FieldSpec& field, std::uint64_t n) {
    if (n == 0 || (field.order() - 1) % n != 0)
        throw std::invalid_argument("primitive_nth_root: " + std::to_string(n) + " does not divide " +
                                    std::to_string(field.order()) + " - 1");
    const std::uint64_t cofactor = (field.order() - 1) / n;
    // Any element of order n generates all of them; take the least power coprime to n.
    FieldElement root;
    for (std::uint64_t r = 1; r < field.order(); ++r) {
        FieldElement candidate = FieldElement::from_rank(field, r).pow(cofactor);
        if (has_order(candidate, n)) {
            root = candidate;
            break;
        }
    }
    if (!root.valid()) throw std::logic_error("primitive_nth_root: no root found");
    FieldElement best = root;
    FieldElement power = root;
    for (std::uint64_t k = 2; k < n; ++k) {
        power *= root;
        if (std::gcd(k, n) == 1 && power.rank() < best.rank()) best = power;
    }
    return best;
}

}  // namespace gccodes
