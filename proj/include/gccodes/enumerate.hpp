#pragma once

// Exhaustive enumeration of the GF(p)-span of a list of words.
//
// A linear code over GF(q^r) is a GF(p)-vector space; given G independent
// GF(p)-generators, its p^G elements are visited in p-ary modular Gray
// order, so that each step adds a single generator. The index
// range is cut into a fixed number of chunks that do not depend on the worker
// count; per-chunk accumulators are merged in chunk order, which makes every
// reduction deterministic regardless of threading.
//
// For p = 2 and length <= 64 words are stored as bit planes (one uint64_t per
// GF(2)-digit of the symbol) and a step is k XORs.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "number_theory.hpp"
#include "symbols.hpp"

namespace gccodes {

struct EnumOptions {
    /// Largest number of words an exhaustive enumeration may visit.
    BigInt guard = BigInt(1) << 28;
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 1;
};

namespace detail {

constexpr unsigned kMaxPlanes = 16;
using Planes = std::array<std::uint64_t, kMaxPlanes>;

}  // namespace detail

/// Read access to the current word in the bit-plane representation.
class BinaryWordView {
public:
    BinaryWordView(const detail::Planes& planes, unsigned digits, unsigned base_digits, std::uint32_t length)
        : planes_(&planes), digits_(digits), base_digits_(base_digits), length_(length) {}

    std::uint32_t length() const noexcept { return length_; }
    std::uint32_t hamming_weight() const noexcept {
        std::uint64_t any = 0;
        for (unsigned l = 0; l < digits_; ++l) any |= (*planes_)[l];
        return static_cast<std::uint32_t>(std::popcount(any));
    }
    /// Coordinates lying in GF(q).
    std::uint32_t base_weight() const noexcept {
        std::uint64_t outside = 0;
        for (unsigned l = base_digits_; l < digits_; ++l) outside |= (*planes_)[l];
        return length_ - static_cast<std::uint32_t>(std::popcount(outside));
    }
    bool coordinate_sum_nonzero() const noexcept {
        for (unsigned l = 0; l < digits_; ++l)
            if (std::popcount((*planes_)[l]) & 1) return true;
        return false;
    }
    Symbol symbol(std::uint32_t i) const noexcept {
        Symbol s = 0;
        for (unsigned l = 0; l < digits_; ++l) s |= static_cast<Symbol>(((*planes_)[l] >> i) & 1U) << l;
        return s;
    }
    Word word() const {
        Word w(length_);
        for (std::uint32_t i = 0; i < length_; ++i) w[i] = symbol(i);
        return w;
    }
    const detail::Planes& planes() const noexcept { return *planes_; }

private:
    const detail::Planes* planes_;
    unsigned digits_;
    unsigned base_digits_;
    std::uint32_t length_;
};

/// Read access to the current word as a symbol vector.
class SymbolWordView {
public:
    SymbolWordView(const Word& word, const SymbolCodec& codec) : word_(&word), codec_(&codec) {}

    std::uint32_t length() const noexcept { return static_cast<std::uint32_t>(word_->size()); }
    std::uint32_t hamming_weight() const noexcept {
        return static_cast<std::uint32_t>(std::count_if(word_->begin(), word_->end(), [](Symbol s) { return s != 0; }));
    }
    std::uint32_t base_weight() const noexcept {
        return static_cast<std::uint32_t>(
            std::count_if(word_->begin(), word_->end(), [this](Symbol s) { return codec_->in_base(s); }));
    }
    bool coordinate_sum_nonzero() const noexcept {
        Symbol sum = 0;
        for (Symbol s : *word_) sum = codec_->add(sum, s);
        return sum != 0;
    }
    Symbol symbol(std::uint32_t i) const noexcept { return (*word_)[i]; }
    const Word& word() const noexcept { return *word_; }

private:
    const Word* word_;
    const SymbolCodec* codec_;
};

class SpanEnumerator {
public:
    /// generators must be GF(p)-independent words of equal length over codec.
    SpanEnumerator(const SymbolCodec& codec, std::uint32_t length, std::vector<Word> generators)
        : codec_(&codec), length_(length), generators_(std::move(generators)) {
        for (const auto& g : generators_)
            if (g.size() != length_) throw std::invalid_argument("SpanEnumerator: generator length mismatch");
        binary_ = codec.p() == 2 && length_ <= 64 && codec.digits() <= detail::kMaxPlanes;
    }

    const SymbolCodec& codec() const noexcept { return *codec_; }
    std::uint32_t length() const noexcept { return length_; }
    const std::vector<Word>& generators() const noexcept { return generators_; }
    BigInt size() const { return nt::big_pow(BigInt(codec_->p()), static_cast<unsigned>(generators_.size())); }

    void check_guard(const EnumOptions& opts) const {
        if (size() > opts.guard) throw GuardExceeded(size(), opts.guard);
        if (size() > BigInt(std::uint64_t{1} << 62U)) throw GuardExceeded(size(), BigInt(std::uint64_t{1} << 62U));
    }

    /// Visits every word of the span. init() creates a per-chunk accumulator,
    /// step(acc, view) consumes one word (view is BinaryWordView or
    /// SymbolWordView), merge(into, from) combines chunks in order.
    template <class Init, class Step, class Merge>
    auto reduce(const EnumOptions& opts, Init init, Step step, Merge merge) const {
        using Acc = decltype(init());
        check_guard(opts);
        const auto p = codec_->p();
        const auto g = static_cast<unsigned>(generators_.size());

        unsigned high = 0;  // digits that select the chunk
        std::uint64_t chunks = 1;
        while (high < g && chunks < 64) {
            chunks *= p;
            ++high;
        }
        const unsigned low = g - high;
        const std::uint64_t chunk_size = nt::checked_pow(p, low);

        std::vector<std::optional<Acc>> results(chunks);
        auto run_chunk = [&](std::uint64_t c) {
            Acc acc = init();
            if (binary_)
                run_binary(c * chunk_size, chunk_size, acc, step);
            else
                run_generic(c * chunk_size, chunk_size, low, acc, step);
            results[c] = std::move(acc);
        };

        unsigned workers = opts.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opts.threads;
        workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
        if (workers <= 1) {
            for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
        } else {
            std::atomic<std::uint64_t> next{0};
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
                });
            for (auto& t : pool) t.join();
        }

        Acc total = std::move(*results[0]);
        for (std::uint64_t c = 1; c < chunks; ++c) merge(total, std::move(*results[c]));
        return total;
    }

private:
    template <class Acc, class Step>
    void run_binary(std::uint64_t start, std::uint64_t count, Acc& acc, Step& step) const {
        const unsigned digits = codec_->digits();
        std::vector<detail::Planes> gens(generators_.size());
        for (std::size_t j = 0; j < generators_.size(); ++j) {
            gens[j].fill(0);
            for (std::uint32_t i = 0; i < length_; ++i)
                for (unsigned l = 0; l < digits; ++l)
                    gens[j][l] |= static_cast<std::uint64_t>((generators_[j][i] >> l) & 1U) << i;
        }
        detail::Planes word{};
        const std::uint64_t gray = start ^ (start >> 1U);
        for (std::size_t j = 0; j < gens.size(); ++j)
            if ((gray >> j) & 1U)
                for (unsigned l = 0; l < digits; ++l) word[l] ^= gens[j][l];

        const BinaryWordView view(word, digits, codec_->e(), length_);
        for (std::uint64_t t = 0;; ++t) {
            step(acc, view);
            if (t + 1 == count) break;
            const auto j = static_cast<unsigned>(std::countr_zero(t + 1));
            for (unsigned l = 0; l < digits; ++l) word[l] ^= gens[j][l];
        }
    }

    template <class Acc, class Step>
    void run_generic(std::uint64_t start, std::uint64_t count, unsigned low, Acc& acc, Step& step) const {
        const auto p = codec_->p();
        const auto g = generators_.size();
        std::vector<std::uint64_t> digits(g + 1, 0);
        {
            std::uint64_t t = start;
            for (std::size_t i = 0; i < g; ++i) {
                digits[i] = t % p;
                t /= p;
            }
        }
        Word word(length_, 0);
        for (std::size_t i = 0; i < g; ++i) {
            const std::uint64_t gray = (digits[i] + p - digits[i + 1]) % p;
            for (std::uint64_t rep = 0; rep < gray; ++rep) add_into(word, generators_[i]);
        }
        const SymbolWordView view(word, *codec_);
        for (std::uint64_t t = 0;; ++t) {
            step(acc, view);
            if (t + 1 == count) break;
            unsigned j = 0;
            while (j < low && digits[j] == p - 1) digits[j++] = 0;
            ++digits[j];
            add_into(word, generators_[j]);
        }
    }

    void add_into(Word& word, const Word& gen) const {
        for (std::uint32_t i = 0; i < length_; ++i) word[i] = codec_->add(word[i], gen[i]);
    }

    const SymbolCodec* codec_;
    std::uint32_t length_;
    std::vector<Word> generators_;
    bool binary_ = false;
};

/// Histogram helpers for reduce().
using Histogram = std::vector<std::uint64_t>;

inline void merge_histograms(Histogram& into, Histogram&& from) {
    if (into.size() < from.size()) into.resize(from.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

/// Row-reduces words over GF(p) (each symbol contributes its digits) and
/// returns an independent spanning subset of the row space.
inline std::vector<Word> independent_span_basis(const SymbolCodec& codec, std::vector<Word> words) {
    if (words.empty()) return {};
    const auto p = codec.p();
    const std::size_t len = words.front().size();
    const unsigned k = codec.digits();
    auto to_digits = [&](const Word& w) {
        std::vector<std::uint64_t> d(len * k);
        for (std::size_t i = 0; i < len; ++i)
            for (unsigned l = 0; l < k; ++l) d[i * k + l] = codec.digit(w[i], l);
        return d;
    };
    auto from_digits = [&](const std::vector<std::uint64_t>& d) {
        Word w(len, 0);
        for (std::size_t i = 0; i < len; ++i) {
            std::uint64_t s = 0, scale = 1;
            for (unsigned l = 0; l < k; ++l) {
                s += d[i * k + l] * scale;
                scale *= p;
            }
            w[i] = static_cast<Symbol>(s);
        }
        return w;
    };
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(words.size());
    for (const auto& w : words) rows.push_back(to_digits(w));

    std::size_t rank = 0;
    const std::size_t cols = len * k;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint64_t inv = nt::powmod(rows[rank][c], p - 2, p);
        for (auto& x : rows[rank]) x = nt::mulmod(x, inv, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const std::uint64_t f = rows[r][c];
            for (std::size_t cc = 0; cc < cols; ++cc) rows[r][cc] = (rows[r][cc] + p - nt::mulmod(f, rows[rank][cc], p)) % p;
        }
        ++rank;
    }
    std::vector<Word> out;
    for (std::size_t r = 0; r < rank; ++r) out.push_back(from_digits(rows[r]));
    return out;
}

}  // namespace gccodes
