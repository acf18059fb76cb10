#pragma once

// Text forms of symbols and polynomials over GF(q^r).
// For GF(4) the symbols are named 0, 1, w, w2 (w the canonical element of
// order 3, w2 = w^2 = w + 1); larger fields use the symbol index.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "code.hpp"

namespace gccodes {

inline std::string symbol_name(const SymbolCodec& codec, Symbol s) {
    if (s >= codec.size()) throw std::invalid_argument("symbol_name: symbol out of range");
    if (codec.size() == 4) {
        static const char* names[] = {"0", "1", "w", "w2"};
        return names[s];
    }
    return std::to_string(s);
}

inline Symbol parse_symbol(const SymbolCodec& codec, const std::string& text) {
    if (codec.size() == 4) {
        if (text == "0") return 0;
        if (text == "1") return 1;
        if (text == "w") return 2;
        if (text == "w2") return 3;
        throw std::invalid_argument("parse_symbol: unknown GF(4) symbol '" + text + "'");
    }
    std::size_t pos = 0;
    const unsigned long v = std::stoul(text, &pos);
    if (pos != text.size() || v >= codec.size()) throw std::invalid_argument("parse_symbol: bad symbol '" + text + "'");
    return static_cast<Symbol>(v);
}

/// Coefficients (low degree first) as symbol names; the polynomial must lie over GF(q^r).
inline std::vector<std::string> coefficient_names(const SymbolCodec& codec, const Polynomial& f) {
    std::vector<std::string> out;
    for (const auto& c : f.coeffs()) out.push_back(symbol_name(codec, codec.index_of(c)));
    return out;
}

/// Ascending-degree sum such as "w2*x + w*x^2"; "0" for the zero polynomial.
inline std::string polynomial_string(const SymbolCodec& codec, const Polynomial& f) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Symbol s = codec.index_of(f.coeffs()[i]);
        if (s == 0) continue;
        if (!first) os << " + ";
        first = false;
        const std::string c = symbol_name(codec, s);
        if (i == 0) {
            os << c;
            continue;
        }
        if (s != 1) os << c << '*';
        os << 'x';
        if (i > 1) os << '^' << i;
    }
    return first ? "0" : os.str();
}

}  // namespace gccodes
