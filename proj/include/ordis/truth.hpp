#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "ordis/errors.hpp"

namespace ordis {

/// Three-valued lattice, totally ordered F < F* < T.
/// F* reads "impossible to make true".
enum class TruthValue3 : std::uint8_t { F = 0, Fstar = 1, T = 2 };

/// Four-valued lattice, totally ordered F < F* < T* < T.
/// T* reads "not false but its truth can not be established".
enum class TruthValue4 : std::uint8_t { F = 0, Fstar = 1, Tstar = 2, T = 3 };

template <class V>
struct lattice;

template <>
struct lattice<TruthValue3> {
    static constexpr int size = 3;
    static constexpr TruthValue3 bottom = TruthValue3::F;
    static constexpr TruthValue3 top = TruthValue3::T;
    static constexpr TruthValue3 fstar = TruthValue3::Fstar;
    static constexpr std::array<TruthValue3, 3> values = {TruthValue3::F, TruthValue3::Fstar,
                                                          TruthValue3::T};
};

template <>
struct lattice<TruthValue4> {
    static constexpr int size = 4;
    static constexpr TruthValue4 bottom = TruthValue4::F;
    static constexpr TruthValue4 top = TruthValue4::T;
    static constexpr TruthValue4 fstar = TruthValue4::Fstar;
    static constexpr std::array<TruthValue4, 4> values = {TruthValue4::F, TruthValue4::Fstar,
                                                          TruthValue4::Tstar, TruthValue4::T};
};

template <class V>
constexpr int ordinal(V v) {
    return static_cast<int>(v);
}

template <class V>
constexpr V value_at(int ord) {
    return static_cast<V>(ord);
}

/// Total truth order.
template <class V>
constexpr bool truth_leq(V a, V b) {
    return ordinal(a) <= ordinal(b);
}

template <class V>
constexpr bool truth_lt(V a, V b) {
    return ordinal(a) < ordinal(b);
}

template <class V>
constexpr V truth_min(V a, V b) {
    return truth_leq(a, b) ? a : b;
}

template <class V>
constexpr V truth_max(V a, V b) {
    return truth_leq(a, b) ? b : a;
}

/// Ordered disjunction on truth values: the right operand counts only when the
/// left one is impossible.
template <class V>
constexpr V times(V u, V v) {
    return u == lattice<V>::fstar ? v : u;
}

/// Strict minimality order. Three-valued: F below T and F below F*, nothing
/// else. Four-valued: F below everything and T* below T; F* stays incomparable
/// with both T* and T.
constexpr bool truth_prec(TruthValue3 a, TruthValue3 b) {
    return a == TruthValue3::F && (b == TruthValue3::T || b == TruthValue3::Fstar);
}

constexpr bool truth_prec(TruthValue4 a, TruthValue4 b) {
    if (a == TruthValue4::F) return b != TruthValue4::F;
    return a == TruthValue4::Tstar && b == TruthValue4::T;
}

template <class V>
constexpr bool truth_preceq(V a, V b) {
    return a == b || truth_prec(a, b);
}

inline std::string to_string(TruthValue3 v) {
    switch (v) {
        case TruthValue3::F: return "F";
        case TruthValue3::Fstar: return "F*";
        case TruthValue3::T: return "T";
    }
    return "?";
}

inline std::string to_string(TruthValue4 v) {
    switch (v) {
        case TruthValue4::F: return "F";
        case TruthValue4::Fstar: return "F*";
        case TruthValue4::Tstar: return "T*";
        case TruthValue4::T: return "T";
    }
    return "?";
}

inline std::optional<TruthValue3> parse_truth3(const std::string& s) {
    if (s == "F") return TruthValue3::F;
    if (s == "F*") return TruthValue3::Fstar;
    if (s == "T") return TruthValue3::T;
    return std::nullopt;
}

inline std::optional<TruthValue4> parse_truth4(const std::string& s) {
    if (s == "F") return TruthValue4::F;
    if (s == "F*") return TruthValue4::Fstar;
    if (s == "T*") return TruthValue4::Tstar;
    if (s == "T") return TruthValue4::T;
    return std::nullopt;
}

/// The three-valued lattice embeds into the four-valued one unchanged.
constexpr TruthValue4 widen(TruthValue3 v) {
    switch (v) {
        case TruthValue3::F: return TruthValue4::F;
        case TruthValue3::Fstar: return TruthValue4::Fstar;
        case TruthValue3::T: return TruthValue4::T;
    }
    return TruthValue4::F;
}

/// Inverse of widen; only defined away from T*.
constexpr TruthValue3 narrow(TruthValue4 v) {
    switch (v) {
        case TruthValue4::F: return TruthValue3::F;
        case TruthValue4::Fstar: return TruthValue3::Fstar;
        case TruthValue4::T: return TruthValue3::T;
        case TruthValue4::Tstar: break;
    }
    throw Error("T* has no three-valued counterpart");
}

}  // namespace ordis
