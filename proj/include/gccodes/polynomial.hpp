#pragma once

// Dense univariate polynomials over a FieldSpec.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "field.hpp"

namespace gccodes {

class Polynomial {
public:
    explicit Polynomial(const FieldSpec& field) : field_(&field) {}
    Polynomial(const FieldSpec& field, std::vector<FieldElement> coeffs) : field_(&field), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_)
            if (&c.field() != field_) throw std::invalid_argument("Polynomial: coefficient from a different field");
        normalize();
    }

    /// Polynomial with coefficients given as prime-field integers (lowest degree first).
    static Polynomial from_integers(const FieldSpec& field, const std::vector<std::int64_t>& coeffs) {
        std::vector<FieldElement> c;
        c.reserve(coeffs.size());
        for (auto v : coeffs) c.push_back(FieldElement::constant(field, v));
        return {field, std::move(c)};
    }
    static Polynomial constant(const FieldElement& c) { return {c.field(), {c}}; }
    static Polynomial one(const FieldSpec& field) { return constant(FieldElement::one(field)); }
    /// c * x^k.
    static Polynomial monomial(const FieldElement& c, std::size_t k) {
        std::vector<FieldElement> v(k + 1, FieldElement::zero(c.field()));
        v[k] = c;
        return {c.field(), std::move(v)};
    }
    /// x^n - 1.
    static Polynomial xn_minus_1(const FieldSpec& field, std::size_t n) {
        return monomial(FieldElement::one(field), n) - one(field);
    }

    const FieldSpec& field() const noexcept { return *field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^i (zero beyond the degree).
    FieldElement coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : FieldElement::zero(*field_);
    }
    const FieldElement& leading() const {
        if (coeffs_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        const FieldElement inv = leading().inverse();
        Polynomial out = *this;
        for (auto& c : out.coeffs_) c *= inv;
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same(o);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), FieldElement::zero(*field_));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_same(o);
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), FieldElement::zero(*field_));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(*a.field_);
        std::vector<FieldElement> prod(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement::zero(*a.field_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return {*a.field_, std::move(prod)};
    }
    friend Polynomial operator*(const FieldElement& c, const Polynomial& f) {
        Polynomial out = f;
        for (auto& x : out.coeffs_) x = c * x;
        out.normalize();
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    void check_same(const Polynomial& o) const {
        if (field_ != o.field_) throw std::invalid_argument("Polynomial: operands over different fields");
    }

    const FieldSpec* field_;
    std::vector<FieldElement> coeffs_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// f = quotient * g + remainder with deg remainder < deg g.
inline DivMod divmod(const Polynomial& f, const Polynomial& g) {
    if (&f.field() != &g.field()) throw std::invalid_argument("divmod: operands over different fields");
    if (g.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    const FieldSpec& field = f.field();
    const std::size_t dg = *g.degree();
    std::vector<FieldElement> rem = f.coeffs();
    if (rem.size() <= dg) return {Polynomial(field), f};
    std::vector<FieldElement> quot(rem.size() - dg, FieldElement::zero(field));
    const FieldElement lead_inv = g.leading().inverse();
    for (std::size_t d = rem.size(); d-- > dg;) {
        if (rem[d].is_zero()) continue;
        const FieldElement c = rem[d] * lead_inv;
        quot[d - dg] = c;
        for (std::size_t i = 0; i <= dg; ++i) rem[d - dg + i] -= c * g.coeffs()[i];
    }
    rem.resize(dg);
    return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

inline bool divides(const Polynomial& g, const Polynomial& f) { return divmod(f, g).remainder.is_zero(); }

/// Monic greatest common divisor (Euclid).
inline Polynomial gcd(Polynomial a, Polynomial b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd: both arguments are zero");
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic least common multiple.
inline Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("lcm: both arguments are zero");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
    return divmod(a * b, gcd(a, b)).quotient.monic();
}

/// Coefficientwise Frobenius c -> c^q.
inline Polynomial sigma(const Polynomial& f, std::uint64_t q) {
    std::vector<FieldElement> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(frobenius_pow(x, q, 1));
    return {f.field(), std::move(c)};
}

/// sigma^i applied coefficientwise.
inline Polynomial sigma_pow(const Polynomial& f, std::uint64_t q, std::uint64_t i) {
    std::vector<FieldElement> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(frobenius_pow(x, q, i));
    return {f.field(), std::move(c)};
}

/// psi = sigma - id.
inline Polynomial psi(const Polynomial& f, std::uint64_t q) { return sigma(f, q) - f; }

/// x^deg f * f(1/x).
inline Polynomial reciprocal(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("reciprocal: zero polynomial");
    std::vector<FieldElement> c(f.coeffs().rbegin(), f.coeffs().rend());
    return {f.field(), std::move(c)};
}

/// Reduction modulo x^n - 1 (exponents folded mod n).
inline Polynomial mod_xn_minus_1(const Polynomial& f, std::size_t n) {
    if (n == 0) throw std::invalid_argument("mod_xn_minus_1: n must be positive");
    std::vector<FieldElement> c(n, FieldElement::zero(f.field()));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i % n] += f.coeffs()[i];
    return {f.field(), std::move(c)};
}

/// Horner evaluation.
inline FieldElement evaluate(const Polynomial& f, const FieldElement& a) {
    if (&a.field() != &f.field()) throw std::invalid_argument("evaluate: point from a different field");
    FieldElement acc = FieldElement::zero(f.field());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * a + *it;
    return acc;
}

/// True iff every coefficient satisfies c^(p^d) = c.
inline bool coefficients_in_subfield(const Polynomial& f, unsigned d) {
    for (const auto& c : f.coeffs())
        if (!in_subfield(c, d)) return false;
    return true;
}

}  // namespace gccodes
