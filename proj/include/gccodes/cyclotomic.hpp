#pragma once

// Orbits of G = <q> and H = <q^r> acting on Z/nZ by multiplication, and the
// q^r-blocks that parametrize Galois supplemented cyclic codes.
//
// A subset B of Z/nZ is a q^r-block when it is a union of H-orbits, no two of
// them in the same G-orbit, and r | ord(q mod n/gcd(n,k)) for every k in B.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "number_theory.hpp"

namespace gccodes {

using Residues = std::vector<std::uint32_t>;

class OrbitTable {
public:
    /// Throws std::invalid_argument if gcd(n, q) != 1, q is not a prime power, n < 2 or r < 1.
    OrbitTable(std::uint32_t n, std::uint64_t q, unsigned r) : n_(n), q_(q), r_(r) {
        if (n < 2) throw std::invalid_argument("OrbitTable: n must be at least 2");
        if (!nt::prime_power(q).valid()) throw std::invalid_argument("OrbitTable: q must be a prime power");
        if (r < 1) throw std::invalid_argument("OrbitTable: r must be positive");
        if (std::gcd<std::uint64_t>(n, q) != 1) throw std::invalid_argument("OrbitTable: gcd(n, q) != 1");

        s_ = nt::mult_order(q, n);
        const std::uint64_t qr = nt::powmod(q, r, n);
        h_orbits_ = orbits(qr, h_orbit_of_);
        g_orbits_ = orbits(q % n, g_orbit_of_);
        h_to_g_.resize(h_orbits_.size());
        for (std::size_t i = 0; i < h_orbits_.size(); ++i) h_to_g_[i] = g_orbit_of_[h_orbits_[i].front()];

        m_.resize(n);
        s_k_.resize(n);
        for (std::uint32_t k = 0; k < n; ++k) {
            m_[k] = n / std::gcd(n, k);
            s_k_[k] = nt::mult_order(q, m_[k]);
        }
    }

    std::uint32_t n() const noexcept { return n_; }
    std::uint64_t q() const noexcept { return q_; }
    unsigned r() const noexcept { return r_; }
    /// ord(q mod n).
    std::uint64_t s() const noexcept { return s_; }

    /// Orbit partitions, each orbit sorted, orbits ordered by least element.
    const std::vector<Residues>& h_orbits() const noexcept { return h_orbits_; }
    const std::vector<Residues>& g_orbits() const noexcept { return g_orbits_; }
    std::size_t h_orbit_of(std::uint32_t k) const { return h_orbit_of_.at(k); }
    std::size_t g_orbit_of(std::uint32_t k) const { return g_orbit_of_.at(k); }
    /// Index of the G-orbit containing H-orbit i.
    std::size_t g_orbit_of_h(std::size_t i) const { return h_to_g_.at(i); }
    /// m_k = n / gcd(n, k).
    std::uint32_t m(std::uint32_t k) const { return m_.at(k); }
    /// s_k = ord(q mod m_k).
    std::uint64_t s_k(std::uint32_t k) const { return s_k_.at(k); }

    /// {a*k mod n : k in set}, sorted.
    Residues scale(const Residues& set, std::int64_t a) const {
        const auto nn = static_cast<std::int64_t>(n_);
        const std::int64_t am = ((a % nn) + nn) % nn;
        Residues out;
        out.reserve(set.size());
        for (auto k : set) out.push_back(static_cast<std::uint32_t>((am * k) % nn));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    std::vector<Residues> orbits(std::uint64_t mult, std::vector<std::size_t>& orbit_of) const {
        std::vector<Residues> out;
        orbit_of.assign(n_, SIZE_MAX);
        for (std::uint32_t k = 0; k < n_; ++k) {
            if (orbit_of[k] != SIZE_MAX) continue;
            Residues orbit;
            std::uint64_t x = k;
            do {
                orbit_of[x] = out.size();
                orbit.push_back(static_cast<std::uint32_t>(x));
                x = (x * mult) % n_;
            } while (x != k);
            std::sort(orbit.begin(), orbit.end());
            out.push_back(std::move(orbit));
        }
        return out;
    }

    std::uint32_t n_;
    std::uint64_t q_;
    unsigned r_;
    std::uint64_t s_ = 0;
    std::vector<Residues> h_orbits_, g_orbits_;
    std::vector<std::size_t> h_orbit_of_, g_orbit_of_, h_to_g_;
    std::vector<std::uint32_t> m_;
    std::vector<std::uint64_t> s_k_;
};

using OrbitTablePtr = std::shared_ptr<const OrbitTable>;

inline OrbitTablePtr make_orbit_table(std::uint32_t n, std::uint64_t q, unsigned r) {
    return std::make_shared<const OrbitTable>(n, q, r);
}

/// Galois supplemented codes of length n over GF(q^r) exist iff r | ord(q mod n).
inline bool galois_supplemented_exists(std::uint32_t n, std::uint64_t q, unsigned r) {
    if (std::gcd<std::uint64_t>(n, q) != 1) throw std::invalid_argument("galois_supplemented_exists: gcd(n, q) != 1");
    return nt::mult_order(q, n) % r == 0;
}

struct BlockCheck {
    bool valid = false;
    std::string reason;  // empty when valid
    explicit operator bool() const noexcept { return valid; }
};

/// Checks the three q^r-block conditions; the reason names the first violation.
inline BlockCheck validate_block(const Residues& elements, const OrbitTable& table) {
    std::set<std::uint32_t> set;
    for (auto k : elements) {
        if (k >= table.n()) return {false, "element " + std::to_string(k) + " outside Z/nZ"};
        set.insert(k);
    }
    std::set<std::size_t> h_used;
    for (auto k : set) h_used.insert(table.h_orbit_of(k));
    for (auto h : h_used)
        for (auto k : table.h_orbits()[h])
            if (!set.count(k)) return {false, "not a union of H-orbits"};
    std::set<std::size_t> g_used;
    for (auto h : h_used)
        if (!g_used.insert(table.g_orbit_of_h(h)).second) return {false, "two H-orbits in one G-orbit"};
    for (auto k : set)
        if (table.s_k(k) % table.r() != 0)
            return {false, "r does not divide ord(q mod m_k) for k = " + std::to_string(k)};
    return {true, {}};
}

/// A subset of Z/nZ tied to its orbit table. Predicates other than is_valid()
/// require a valid block and throw std::invalid_argument otherwise.
class Block {
public:
    Block(Residues elements, OrbitTablePtr table) : elements_(std::move(elements)), table_(std::move(table)) {
        if (!table_) throw std::invalid_argument("Block: null orbit table");
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    const Residues& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const OrbitTable& table() const noexcept { return *table_; }
    const OrbitTablePtr& table_ptr() const noexcept { return table_; }

    BlockCheck check() const { return validate_block(elements_, *table_); }
    bool is_valid() const {
        if (!valid_) valid_ = check().valid;
        return *valid_;
    }

    /// The translates q^k B (0 <= k < r) partition Z/nZ \ {0}.
    bool is_complete() const {
        require_valid("is_complete");
        if (!complete_) {
            std::vector<int> hits(table_->n(), 0);
            Residues t = elements_;
            for (unsigned k = 0; k < table_->r(); ++k) {
                for (auto x : t) ++hits[x];
                t = table_->scale(t, static_cast<std::int64_t>(table_->q() % table_->n()));
            }
            bool ok = hits[0] == 0;
            for (std::uint32_t x = 1; x < table_->n() && ok; ++x) ok = hits[x] == 1;
            complete_ = ok;
        }
        return *complete_;
    }

    /// -B = B.
    bool is_reversible() const {
        require_valid("is_reversible");
        return table_->scale(elements_, -1) == elements_;
    }

    /// B = -2B; only defined for complete q^2-blocks with q a power of 2.
    bool is_self_dual_candidate() const {
        require_valid("is_self_dual_candidate");
        const auto pp = nt::prime_power(table_->q());
        if (pp.prime != 2) throw std::invalid_argument("is_self_dual_candidate: q must be a power of 2");
        if (table_->r() != 2) throw std::invalid_argument("is_self_dual_candidate: requires r = 2");
        if (!is_complete()) throw std::invalid_argument("is_self_dual_candidate: block is not complete");
        return table_->scale(elements_, -2) == elements_;
    }

    /// a * B as a block over the same table.
    Block scaled(std::int64_t a) const { return {table_->scale(elements_, a), table_}; }

    friend bool operator==(const Block& a, const Block& b) { return a.elements_ == b.elements_; }

private:
    void require_valid(const char* what) const {
        if (!is_valid()) throw std::invalid_argument(std::string(what) + ": invalid block (" + check().reason + ")");
    }

    Residues elements_;
    OrbitTablePtr table_;
    mutable std::optional<bool> valid_;
    mutable std::optional<bool> complete_;
};

/// Quadratic residues modulo an odd prime n (nonzero squares).
inline Residues quadratic_residues(std::uint32_t n) {
    if (n < 3 || !nt::is_prime(n)) throw std::invalid_argument("quadratic_residues: n must be an odd prime");
    std::set<std::uint32_t> s;
    for (std::uint64_t x = 1; x < n; ++x) s.insert(static_cast<std::uint32_t>(x * x % n));
    return {s.begin(), s.end()};
}

struct BlockFilter {
    std::optional<bool> complete;
    std::optional<bool> reversible;
    /// Blocks where the self-dual predicate is undefined count as not self-dual.
    std::optional<bool> self_dual;
    std::optional<std::size_t> size;
    std::uint32_t max_n = 255;
};

/// All nonempty valid blocks matching the filter, sorted by element list.
inline std::vector<Block> enumerate_blocks(const OrbitTablePtr& table, const BlockFilter& filter = {}) {
    if (table->n() > filter.max_n)
        throw std::invalid_argument("enumerate_blocks: n = " + std::to_string(table->n()) + " exceeds limit " +
                                    std::to_string(filter.max_n));
    // Per G-orbit, the H-orbits eligible for a block (r | s_k is constant on G-orbits).
    std::vector<std::vector<std::size_t>> choices(table->g_orbits().size());
    for (std::size_t h = 0; h < table->h_orbits().size(); ++h) {
        const auto k = table->h_orbits()[h].front();
        if (table->s_k(k) % table->r() == 0) choices[table->g_orbit_of_h(h)].push_back(h);
    }
    std::vector<std::size_t> live;
    for (std::size_t g = 0; g < choices.size(); ++g)
        if (!choices[g].empty()) live.push_back(g);

    std::vector<Block> out;
    Residues current;
    const bool self_dual_defined = nt::prime_power(table->q()).prime == 2 && table->r() == 2;
    std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
        if (depth == live.size()) {
            if (current.empty()) return;
            if (filter.size && current.size() != *filter.size) return;
            Block b(current, table);
            if (filter.complete && b.is_complete() != *filter.complete) return;
            if (filter.reversible && b.is_reversible() != *filter.reversible) return;
            if (filter.self_dual) {
                const bool sd = self_dual_defined && b.is_complete() && b.is_self_dual_candidate();
                if (sd != *filter.self_dual) return;
            }
            out.push_back(std::move(b));
            return;
        }
        recurse(depth + 1);
        for (auto h : choices[live[depth]]) {
            const auto& orbit = table->h_orbits()[h];
            const auto mark = current.size();
            current.insert(current.end(), orbit.begin(), orbit.end());
            recurse(depth + 1);
            current.resize(mark);
        }
    };
    recurse(0);
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.elements() < b.elements(); });
    return out;
}

}  // namespace gccodes
