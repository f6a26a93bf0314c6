#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ordis/errors.hpp"
#include "ordis/literal.hpp"
#include "ordis/syntax.hpp"
#include "ordis/truth.hpp"

namespace ordis {

/// A total assignment of truth values to the literal universe sigma.
/// Lookups of literals outside sigma raise DomainMismatchError.
template <class V>
struct Interpretation {
    SigmaPtr sigma;
    std::vector<V> values;

    Interpretation() = default;

    explicit Interpretation(SigmaPtr sigma, V fill = lattice<V>::bottom)
        : sigma(std::move(sigma)), values(this->sigma ? this->sigma->size() : 0, fill) {}

    Interpretation(SigmaPtr sigma, std::vector<V> values)
        : sigma(std::move(sigma)), values(std::move(values)) {}

    std::size_t size() const { return values.size(); }

    V at(std::size_t i) const { return values[i]; }

    V at(const Literal& l) const {
        auto pos = sigma->position(l);
        if (!pos) throw DomainMismatchError("literal " + l.to_string() + " is not in the domain");
        return values[*pos];
    }

    void set(const Literal& l, V v) {
        auto pos = sigma->position(l);
        if (!pos) throw DomainMismatchError("literal " + l.to_string() + " is not in the domain");
        values[*pos] = v;
    }

    bool operator==(const Interpretation& other) const {
        return same_domain(sigma, other.sigma) && values == other.values;
    }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out += ", ";
            out += sigma->literals[i].to_string() + "=" + ordis::to_string(values[i]);
        }
        return out + "}";
    }
};

using Interpretation3 = Interpretation<TruthValue3>;
using Interpretation4 = Interpretation<TruthValue4>;

template <class V>
void require_same_domain(const Interpretation<V>& a, const Interpretation<V>& b) {
    if (!same_domain(a.sigma, b.sigma))
        throw DomainMismatchError("interpretations have different domains");
}

template <class V>
void require_domain(const Interpretation<V>& i, const Program& p) {
    if (!same_domain(i.sigma, p.sigma))
        throw DomainMismatchError("interpretation domain differs from the program's universe");
}

/// Pointwise truth order.
template <class V>
bool interp_leq(const Interpretation<V>& a, const Interpretation<V>& b) {
    require_same_domain(a, b);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (!truth_leq(a.values[i], b.values[i])) return false;
    return true;
}

/// Pointwise minimality order.
template <class V>
bool interp_preceq(const Interpretation<V>& a, const Interpretation<V>& b) {
    require_same_domain(a, b);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (!truth_preceq(a.values[i], b.values[i])) return false;
    return true;
}

/// Strict versions: pointwise order plus inequality somewhere. These are the
/// orders the minimality notions build on.
template <class V>
bool interp_lt(const Interpretation<V>& a, const Interpretation<V>& b) {
    return interp_leq(a, b) && a.values != b.values;
}

template <class V>
bool interp_prec(const Interpretation<V>& a, const Interpretation<V>& b) {
    return interp_preceq(a, b) && a.values != b.values;
}

/// Alternative strict reading: strictly below at every single literal. Far
/// more demanding than interp_lt/interp_prec; kept so the two readings can be
/// compared directly. Minimality under this reading would accept e.g. the
/// all-T assignment for "a * b." and is not used by the solver.
template <class V>
bool interp_lt_everywhere(const Interpretation<V>& a, const Interpretation<V>& b) {
    require_same_domain(a, b);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (!truth_lt(a.values[i], b.values[i])) return false;
    return true;
}

template <class V>
bool interp_prec_everywhere(const Interpretation<V>& a, const Interpretation<V>& b) {
    require_same_domain(a, b);
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (!truth_prec(a.values[i], b.values[i])) return false;
    return true;
}

/// Embeds a three-valued interpretation into the four-valued logic (no T*).
inline Interpretation4 widen(const Interpretation3& i) {
    Interpretation4 out(i.sigma);
    for (std::size_t k = 0; k < i.values.size(); ++k) out.values[k] = widen(i.values[k]);
    return out;
}

/// Reads a solid four-valued interpretation back as three-valued.
inline Interpretation3 narrow(const Interpretation4& i) {
    Interpretation3 out(i.sigma);
    for (std::size_t k = 0; k < i.values.size(); ++k) out.values[k] = narrow(i.values[k]);
    return out;
}

}  // namespace ordis
