#pragma once

// F_q-weight enumerators of cyclic codes over GF(q^r).
//
// The F_q-weight of a word is the number of its coordinates lying in GF(q).
// For a Galois supplemented code (generator g Galois coprime) the counts have
// closed forms depending only on q, r, n and deg g; the *_brute functions
// count the same quantities by enumerating every codeword and serve as
// oracles for the closed forms.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "code.hpp"
#include "enumerate.hpp"

namespace gccodes {

namespace detail {

inline Histogram hamming_histogram(const SpanEnumerator& span, const EnumOptions& opts) {
    const auto len = span.length();
    return span.reduce(
        opts, [len] { return Histogram(len + 1, 0); },
        [](Histogram& h, const auto& v) { ++h[v.hamming_weight()]; }, merge_histograms);
}

inline Histogram base_weight_histogram(const SpanEnumerator& span, const EnumOptions& opts) {
    const auto len = span.length();
    return span.reduce(
        opts, [len] { return Histogram(len + 1, 0); },
        [](Histogram& h, const auto& v) { ++h[v.base_weight()]; }, merge_histograms);
}

inline WeightEnumerator to_enumerator(const Histogram& h, WeightKind kind) {
    WeightEnumerator out(static_cast<std::uint32_t>(h.size() - 1), kind);
    for (std::size_t w = 0; w < h.size(); ++w) out.counts[w] = h[w];
    return out;
}

/// b_w = q^exponent * a_{n-w}; negative exponents must divide exactly.
inline WeightEnumerator scale_and_reverse(const WeightEnumerator& a, std::uint64_t q, long long exponent) {
    WeightEnumerator out(a.n, WeightKind::fq_weight);
    for (std::uint32_t w = 0; w <= a.n; ++w) {
        BigInt v = a.counts[a.n - w];
        if (exponent >= 0) {
            v *= nt::big_pow(BigInt(q), static_cast<unsigned>(exponent));
        } else {
            const BigInt d = nt::big_pow(BigInt(q), static_cast<unsigned>(-exponent));
            if (v % d != 0) throw std::logic_error("weight enumerator: non-integral count");
            v /= d;
        }
        out.counts[w] = v;
    }
    return out;
}

/// Coefficients of q^exponent ((X + (Q'-1) Y)^m + (Q'-1)(X - Y)^m), Q' = q^(r-1).
inline WeightEnumerator zero_sum_closed_form(std::uint32_t m, std::uint64_t q, unsigned r, long long exponent) {
    const BigInt qq = nt::big_pow(BigInt(q), r - 1) - 1;
    WeightEnumerator raw(m, WeightKind::fq_weight);
    for (std::uint32_t w = 0; w <= m; ++w) {
        const BigInt sign = ((m - w) % 2 == 0) ? 1 : -1;
        raw.counts[m - w] = nt::binomial(m, w) * (nt::big_pow(qq, m - w) + qq * sign);
    }
    // raw is indexed by m - w so that scale_and_reverse puts it back in place.
    return scale_and_reverse(raw, q, exponent);
}

inline std::vector<Word> shift_words(const SymbolCodec& codec, const Polynomial& f, std::uint32_t n,
                                     const std::vector<Symbol>& scalars) {
    std::vector<Word> out;
    const std::size_t deg = *f.degree();
    for (Symbol s : scalars)
        for (std::size_t j = 0; j + deg < n; ++j) {
            Word w(n, 0);
            for (std::size_t i = 0; i <= deg; ++i) w[i + j] = codec.mul(s, codec.index_of(f.coeffs()[i]));
            out.push_back(std::move(w));
        }
    return out;
}

}  // namespace detail

/// b_w = q^(n - r deg g) C(n,w) (q^(r-1) - 1)^(n-w). Requires a Galois coprime generator.
inline WeightEnumerator fqwe_closed(const CyclicCode& code) {
    if (!code.is_galois_supplemented()) throw std::invalid_argument("fqwe_closed: generator is not Galois coprime");
    const std::uint32_t n = code.n();
    const auto deg = static_cast<long long>(*code.generator().degree());
    const long long exponent = static_cast<long long>(n) - static_cast<long long>(code.r()) * deg;
    const BigInt scale = nt::big_pow(BigInt(code.q()), static_cast<unsigned>(exponent));
    const BigInt qq = nt::big_pow(BigInt(code.q()), code.r() - 1) - 1;
    WeightEnumerator out(n, WeightKind::fq_weight);
    for (std::uint32_t w = 0; w <= n; ++w) out.counts[w] = scale * nt::binomial(n, w) * nt::big_pow(qq, n - w);
    return out;
}

/// F_q-weight distribution by enumerating every codeword.
inline WeightEnumerator fqwe_brute(const CyclicCode& code, const EnumOptions& opts = {}) {
    const SpanEnumerator span(code.symbols(), code.n(), code.fp_generators());
    return detail::to_enumerator(detail::base_weight_histogram(span, opts), WeightKind::fq_weight);
}

/// Hamming weight distribution by enumerating every codeword.
inline WeightEnumerator hamming_brute(const CyclicCode& code, const EnumOptions& opts = {}) {
    const SpanEnumerator span(code.symbols(), code.n(), code.fp_generators());
    return detail::to_enumerator(detail::hamming_histogram(span, opts), WeightKind::hamming);
}

/// GF(p)-generators of the extended code (parity symbol -sum c_i appended).
inline std::vector<Word> extended_generators(const CyclicCode& code) {
    const auto& codec = code.symbols();
    std::vector<Word> out = code.fp_generators();
    for (auto& w : out) {
        Symbol sum = 0;
        for (Symbol s : w) sum = codec.add(sum, s);
        w.push_back(codec.neg(sum));
    }
    return out;
}

/// F_q-weight distribution of the extended code by enumeration.
inline WeightEnumerator fqwe_brute_extended(const CyclicCode& code, const EnumOptions& opts = {}) {
    const SpanEnumerator span(code.symbols(), code.n() + 1, extended_generators(code));
    return detail::to_enumerator(detail::base_weight_histogram(span, opts), WeightKind::fq_weight);
}

/// Hamming distribution a_w of the image set psi(C), psi = sigma - id, each
/// image word counted once. The image is enumerated directly from a
/// GF(p)-basis of psi applied to the code's generators.
inline WeightEnumerator psi_weight_enumerator_brute(const CyclicCode& code, const EnumOptions& opts = {}) {
    if (code.cardinality() > opts.guard) throw GuardExceeded(code.cardinality(), opts.guard);
    const auto& codec = code.symbols();
    std::vector<Word> images = code.fp_generators();
    for (auto& w : images)
        for (auto& s : w) s = codec.psi(s);
    const SpanEnumerator span(codec, code.n(), independent_span_basis(codec, std::move(images)));
    return detail::to_enumerator(detail::hamming_histogram(span, opts), WeightKind::psi_image);
}

/// lcm(g, g^sigma, ..., g^(sigma^(r-1))).
inline Polynomial conjugate_lcm(const CyclicCode& code) {
    Polynomial l = code.generator();
    for (unsigned i = 1; i < code.r(); ++i) l = lcm(l, sigma_pow(code.generator(), code.q(), i));
    return l;
}

/// r = 2 route: b_w = q^(n - deg[g, g^sigma]) A_{n-w}, where A is the Hamming
/// distribution of the cyclic code over GF(q) generated by (g, g^sigma).
inline WeightEnumerator fqwe_r2(const CyclicCode& code, const EnumOptions& opts = {}) {
    if (code.r() != 2) throw std::invalid_argument("fqwe_r2: requires r = 2");
    const auto& codec = code.symbols();
    const std::uint32_t n = code.n();
    const Polynomial& g = code.generator();
    const Polynomial gs = sigma(g, code.q());
    const Polynomial d = gcd(g, gs);
    if (!coefficients_in_subfield(d, codec.e())) throw std::logic_error("fqwe_r2: (g, g^sigma) not defined over GF(q)");
    const Polynomial l = lcm(g, gs);

    std::vector<Symbol> base_scalars;
    for (unsigned i = 0; i < codec.e(); ++i) base_scalars.push_back(codec.basis_symbol(i));
    const SpanEnumerator span(codec, n, detail::shift_words(codec, d, n, base_scalars));
    const auto a = detail::to_enumerator(detail::hamming_histogram(span, opts), WeightKind::hamming);
    return detail::scale_and_reverse(a, code.q(), static_cast<long long>(n) - static_cast<long long>(*l.degree()));
}

/// Hamming distribution of {x in T^n : g0 | x}, T the trace-zero elements of
/// GF(q^r); equal to that of the cyclic code over GF(q^(r-1)) generated by g0.
inline WeightEnumerator trace_zero_multiples_brute(const CyclicCode& code, const Polynomial& g0,
                                                   const EnumOptions& opts = {}) {
    const auto& codec = code.symbols();
    std::vector<Word> singles;
    for (Symbol s = 0; s < codec.size(); ++s)
        if (relative_trace(codec.element(s), code.q(), code.r()).is_zero()) singles.push_back(Word{s});
    std::vector<Symbol> scalars;
    for (const auto& w : independent_span_basis(codec, singles)) scalars.push_back(w[0]);
    const SpanEnumerator span(codec, code.n(), detail::shift_words(codec, g0, code.n(), scalars));
    return detail::to_enumerator(detail::hamming_histogram(span, opts), WeightKind::hamming);
}

/// F_q-weights of the subcode generated by g0 g, g Galois coprime and g0 over GF(q).
inline WeightEnumerator fqwe_subcode(const CyclicCode& code, const Polynomial& g0_in, const EnumOptions& opts = {}) {
    if (!code.is_galois_supplemented()) throw std::invalid_argument("fqwe_subcode: generator is not Galois coprime");
    if (&g0_in.field() != &code.field() || g0_in.is_zero()) throw std::invalid_argument("fqwe_subcode: bad g0");
    const Polynomial g0 = g0_in.monic();
    if (!coefficients_in_subfield(g0, code.symbols().e()))
        throw std::invalid_argument("fqwe_subcode: g0 coefficients not in GF(q)");
    if (!divides(g0 * code.generator(), Polynomial::xn_minus_1(code.field(), code.n())))
        throw std::invalid_argument("fqwe_subcode: g0 g does not divide x^n - 1");

    const std::uint32_t n = code.n();
    const unsigned r = code.r();
    const auto deg_g = static_cast<long long>(*code.generator().degree());
    const auto deg_g0 = static_cast<long long>(*g0.degree());
    const long long exponent = static_cast<long long>(n) - static_cast<long long>(r) * deg_g - deg_g0;
    const FieldSpec& field = code.field();

    const BigInt qq = nt::big_pow(BigInt(code.q()), r - 1);  // size of GF(q^(r-1))
    WeightEnumerator a(n, WeightKind::hamming);
    if (g0 == Polynomial::one(field)) {
        for (std::uint32_t w = 0; w <= n; ++w) a.counts[w] = nt::binomial(n, w) * nt::big_pow(qq - 1, w);
    } else if (g0 == Polynomial::from_integers(field, {-1, 1})) {
        for (std::uint32_t w = 0; w <= n; ++w) {
            const BigInt sign = (w % 2 == 0) ? 1 : -1;
            a.counts[w] = nt::binomial(n, w) * (nt::big_pow(qq - 1, w) + (qq - 1) * sign) / qq;
        }
    } else {
        a = trace_zero_multiples_brute(code, g0, opts);
    }
    return detail::scale_and_reverse(a, code.q(), exponent);
}

/// F_q-weights of the even weight subcode C+ (closed form).
inline WeightEnumerator fqwe_even_subcode(const CyclicCode& code) {
    if (!code.is_galois_supplemented()) throw std::invalid_argument("fqwe_even_subcode: generator is not Galois coprime");
    const auto deg = static_cast<long long>(*code.generator().degree());
    const long long exponent = static_cast<long long>(code.n()) - static_cast<long long>(code.r()) * (deg + 1);
    return detail::zero_sum_closed_form(code.n(), code.q(), code.r(), exponent);
}

/// F_q-weights of the extended code (closed form).
inline WeightEnumerator fqwe_extended(const CyclicCode& code) {
    if (!code.is_galois_supplemented()) throw std::invalid_argument("fqwe_extended: generator is not Galois coprime");
    const auto deg = static_cast<long long>(*code.generator().degree());
    const long long exponent = static_cast<long long>(code.n()) + 1 - static_cast<long long>(code.r()) * (deg + 1);
    return detail::zero_sum_closed_form(code.n() + 1, code.q(), code.r(), exponent);
}

/// Dense matrix over a FieldSpec, row-major.
class Matrix {
public:
    Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
        : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(field)) {}

    const FieldSpec& field() const noexcept { return *field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldElement& at(std::size_t i, std::size_t j) { return data_.at(i * cols_ + j); }
    const FieldElement& at(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j); }

    /// Rank of the submatrix formed by the rows whose bit is set in mask.
    std::size_t row_subset_rank(std::uint64_t mask) const {
        std::vector<std::vector<FieldElement>> m;
        for (std::size_t i = 0; i < rows_; ++i)
            if ((mask >> i) & 1U) m.emplace_back(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < m.size(); ++c) {
            std::size_t pivot = rank;
            while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
            if (pivot == m.size()) continue;
            std::swap(m[rank], m[pivot]);
            const FieldElement inv = m[rank][c].inverse();
            for (std::size_t r = rank + 1; r < m.size(); ++r) {
                if (m[r][c].is_zero()) continue;
                const FieldElement f = m[r][c] * inv;
                for (std::size_t cc = c; cc < cols_; ++cc) m[r][cc] -= f * m[rank][cc];
            }
            ++rank;
        }
        return rank;
    }

private:
    const FieldSpec* field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

/// Hamming distribution of {x in T^n : xH = 0} via the subset-rank sum
///   sum_U |T|^(|U| - rk H_U) X^|U| (Y - X)^(n - |U|),
/// where n is the number of rows of H and H_U the rows indexed by U.
inline WeightEnumerator rank_weight_oracle(const Matrix& h, const BigInt& t_size) {
    const std::size_t n = h.rows();
    if (n > 20) throw std::invalid_argument("rank_weight_oracle: at most 20 rows supported");
    std::vector<BigInt> by_size(n + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto u = static_cast<unsigned>(std::popcount(mask));
        by_size[u] += nt::big_pow(t_size, u - static_cast<unsigned>(h.row_subset_rank(mask)));
    }
    WeightEnumerator out(static_cast<std::uint32_t>(n), WeightKind::hamming);
    for (std::size_t w = 0; w <= n; ++w) {
        BigInt acc = 0;
        for (std::size_t u = 0; u <= w; ++u) {
            BigInt term = by_size[u] * nt::binomial(static_cast<unsigned>(n - u), static_cast<unsigned>(w - u));
            acc += ((w - u) % 2 == 0) ? term : BigInt(-term);
        }
        if (acc < 0) throw std::logic_error("rank_weight_oracle: negative count");
        out.counts[w] = acc;
    }
    return out;
}

}  // namespace gccodes
