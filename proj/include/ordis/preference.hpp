#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "ordis/answer_sets.hpp"
#include "ordis/brewka.hpp"
#include "ordis/errors.hpp"
#include "ordis/interpretation.hpp"
#include "ordis/syntax.hpp"

namespace ordis {

/// The literals an interpretation maps to F* ("impossible to make true").
inline LiteralSet fstar_set(const Interpretation3& m) {
    LiteralSet out;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.values[i] == TruthValue3::Fstar) out.insert(m.sigma->literals[i]);
    return out;
}

/// m1 is preferred to m2 when its F*-set is a strict subset of m2's.
inline bool preferred(const Interpretation3& m1, const Interpretation3& m2) {
    require_same_domain(m1, m2);
    return is_strict_subset(fstar_set(m1), fstar_set(m2));
}

/// Indices of the most preferred answer sets (minimal under `preferred`),
/// input order preserved.
inline std::vector<std::size_t> most_preferred_indices(
    const std::vector<Interpretation3>& answer_sets) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < answer_sets.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < answer_sets.size(); ++j) {
            if (j != i && preferred(answer_sets[j], answer_sets[i])) {
                beaten = true;
                break;
            }
        }
        if (!beaten) out.push_back(i);
    }
    return out;
}

inline std::vector<Interpretation3> most_preferred(
    const std::vector<Interpretation3>& answer_sets) {
    std::vector<Interpretation3> out;
    for (std::size_t i : most_preferred_indices(answer_sets)) out.push_back(answer_sets[i]);
    return out;
}

/// Brewka's degree of satisfaction of one LPOD rule in the answer set s:
/// 1 when the body fails, otherwise the index of the first head literal in s.
inline int degree(const LiteralSet& s, const Rule& rule) {
    if (!rule.is_lpod_rule()) throw NotAnLpodError();
    for (const BodyLiteral& b : rule.body)
        if (b.is_not == (s.count(b.lit) != 0)) return 1;  // body fails in s
    for (std::size_t i = 0; i < rule.head_levels.size(); ++i)
        if (s.count(rule.head_levels[i][0])) return static_cast<int>(i) + 1;
    throw UndefinedDegreeError();
}

namespace detail {

/// Rule indices grouped by degree: bucket d-1 holds the rules satisfied to
/// degree d.
inline std::vector<std::set<std::size_t>> degree_buckets(const LiteralSet& s,
                                                         const Program& program) {
    std::size_t max_degree = 1;
    for (const Rule& r : program.rules) max_degree = std::max(max_degree, r.head_levels.size());
    std::vector<std::set<std::size_t>> buckets(max_degree);
    for (std::size_t i = 0; i < program.rules.size(); ++i)
        buckets[degree(s, program.rules[i]) - 1].insert(i);
    return buckets;
}

}  // namespace detail

/// Inclusion preference: s1 beats s2 when, at the first degree where their
/// rule sets differ, s2's set is a strict subset of s1's.
inline bool inclusion_preferred(const LiteralSet& s1, const LiteralSet& s2,
                                const Program& program) {
    if (!program.is_lpod()) throw NotAnLpodError();
    auto b1 = detail::degree_buckets(s1, program);
    auto b2 = detail::degree_buckets(s2, program);
    for (std::size_t k = 0; k < b1.size(); ++k) {
        if (b1[k] == b2[k]) continue;
        return b2[k].size() < b1[k].size() &&
               std::includes(b1[k].begin(), b1[k].end(), b2[k].begin(), b2[k].end());
    }
    return false;
}

inline std::vector<std::size_t> brewka_most_preferred_indices(
    const Program& program, const std::vector<LiteralSet>& answer_sets) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < answer_sets.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < answer_sets.size(); ++j) {
            if (j != i && inclusion_preferred(answer_sets[j], answer_sets[i], program)) {
                beaten = true;
                break;
            }
        }
        if (!beaten) out.push_back(i);
    }
    return out;
}

/// Brewka answer sets nothing else is inclusion-preferred to.
inline std::vector<LiteralSet> brewka_most_preferred(const Program& program,
                                                     const SearchLimits& limits = {}) {
    std::vector<LiteralSet> sets = brewka_answer_sets(program, limits);
    std::vector<LiteralSet> out;
    for (std::size_t i : brewka_most_preferred_indices(program, sets)) out.push_back(sets[i]);
    return out;
}

}  // namespace ordis
