#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ordis/enumerate.hpp"
#include "ordis/errors.hpp"
#include "ordis/eval.hpp"
#include "ordis/interpretation.hpp"
#include "ordis/reduct.hpp"
#include "ordis/syntax.hpp"

namespace ordis {

/// Least model of a non-disjunctive x-reduct, computed as the least fixpoint
/// of the immediate consequence operator
///   T(I)(C) = max { body value | (C <- body) in the reduct }.
/// Each literal climbs F -> F* -> T at most once apiece, so the fixpoint
/// arrives within 2*|sigma|+1 rounds.
inline Interpretation3 least_model(const ReductProgram& reduct) {
    for (const ReductRule& r : reduct.rules)
        if (r.head_level.size() != 1) throw DisjunctiveReductError();

    Interpretation3 interp(reduct.sigma, TruthValue3::F);
    std::size_t max_rounds = 2 * reduct.sigma->size() + 1;
    for (std::size_t round = 0; round <= max_rounds; ++round) {
        bool changed = false;
        for (const ReductRule& rule : reduct.rules) {
            TruthValue3 value = reduct_body_value(interp, rule);
            auto pos = interp.sigma->position(rule.head_level[0]);
            if (!pos)
                throw DomainMismatchError("reduct head literal outside the program universe");
            if (truth_lt(interp.values[*pos], value)) {
                interp.values[*pos] = value;
                changed = true;
            }
        }
        if (!changed) return interp;
    }
    assert(false && "immediate consequence operator failed to converge");
    return interp;
}

namespace detail {

/// Minimality test for disjunctive reducts: no interpretation strictly below
/// m in the truth order may satisfy the reduct. Walks the pointwise down-set
/// of m with an odometer.
inline bool is_minimal_model_of_reduct(const ReductProgram& reduct, const Interpretation3& m) {
    std::size_t n = m.size();
    Interpretation3 candidate = m;
    // Odometer over the down-set {v : v <= m pointwise}, starting just below m.
    while (true) {
        bool advanced = false;
        for (std::size_t i = n; i-- > 0;) {
            if (candidate.values[i] != TruthValue3::F) {
                candidate.values[i] = value_at<TruthValue3>(ordinal(candidate.values[i]) - 1);
                for (std::size_t j = i + 1; j < n; ++j) candidate.values[j] = m.values[j];
                advanced = true;
                break;
            }
        }
        if (!advanced) return true;  // down-set exhausted, nothing below m works
        if (is_model(candidate, reduct)) return false;
    }
}

}  // namespace detail

/// Answer-set test. LPODs demand that m be exactly the least model of its own
/// x-reduct; disjunctive programs demand a minimal model of the (disjunctive)
/// reduct instead. Consistency is required in both cases.
inline bool is_answer_set(const Program& program, const Interpretation3& m) {
    require_domain(m, program);
    if (!is_consistent(m)) return false;
    ReductProgram reduct = x_reduct(program, m);
    if (program.is_lpod()) return least_model(reduct) == m;
    if (!is_model(m, reduct)) return false;
    return detail::is_minimal_model_of_reduct(reduct, m);
}

namespace detail {

inline Interpretation3 decode3(const SigmaPtr& sigma, std::uint64_t code) {
    Interpretation3 interp(sigma);
    std::uint64_t c = code;
    for (std::size_t i = sigma->size(); i-- > 0;) {
        interp.values[i] = value_at<TruthValue3>(static_cast<int>(c % 3));
        c /= 3;
    }
    return interp;
}

}  // namespace detail

/// All answer sets, by exhaustive enumeration over the 3^|sigma| candidate
/// interpretations. Output order is deterministic: candidates are scanned
/// lexicographically over the sigma order with higher truth values first, so
/// for example the all-T candidate comes before any F* one.
inline std::vector<Interpretation3> enumerate_answer_sets(const Program& program,
                                                          const SearchLimits& limits = {}) {
    std::uint64_t cap = limits.candidate_cap ? limits.candidate_cap : kDefaultThreeValuedCap;
    std::uint64_t count = detail::candidate_count(3, program.sigma->size(), cap);
    auto codes = detail::filter_codes_desc(count, limits.threads, [&](std::uint64_t code) {
        return is_answer_set(program, detail::decode3(program.sigma, code));
    });
    std::vector<Interpretation3> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes) out.push_back(detail::decode3(program.sigma, code));
    return out;
}

/// Projection of a three-valued interpretation to its T-literals.
inline LiteralSet collapse(const Interpretation3& m) {
    LiteralSet out;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.values[i] == TruthValue3::T) out.insert(m.sigma->literals[i]);
    return out;
}

}  // namespace ordis
