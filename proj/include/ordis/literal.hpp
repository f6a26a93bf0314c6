#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>

namespace ordis {

/// An atom, possibly under strong negation. "-wine" is the strong negation of
/// "wine"; both are independent members of the literal universe.
struct Literal {
    std::string atom;
    bool strong_neg = false;

    Literal() = default;
    Literal(std::string atom, bool strong_neg = false)
        : atom(std::move(atom)), strong_neg(strong_neg) {}

    Literal complement() const { return Literal(atom, !strong_neg); }

    std::string to_string() const { return strong_neg ? "-" + atom : atom; }

    auto operator<=>(const Literal&) const = default;
};

inline Literal neg(std::string atom) { return Literal(std::move(atom), true); }

struct LiteralHash {
    std::size_t operator()(const Literal& l) const {
        std::size_t h = std::hash<std::string>{}(l.atom);
        return l.strong_neg ? ~h : h;
    }
};

/// Deterministically ordered set of literals (atom name, then negation flag).
using LiteralSet = std::set<Literal>;

inline bool is_strict_subset(const LiteralSet& a, const LiteralSet& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::string to_string(const LiteralSet& s) {
    std::string out = "{";
    bool first = true;
    for (const Literal& l : s) {
        if (!first) out += ", ";
        out += l.to_string();
        first = false;
    }
    return out + "}";
}

}  // namespace ordis
