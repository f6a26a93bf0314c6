#pragma once

#include <cstdint>
#include <vector>

#include "ordis/enumerate.hpp"
#include "ordis/errors.hpp"
#include "ordis/eval.hpp"
#include "ordis/reduct.hpp"
#include "ordis/syntax.hpp"

namespace ordis {

/// Least Herbrand model of a definite program, by naive bottom-up iteration.
inline LiteralSet least_herbrand(const std::vector<DefiniteRule>& rules) {
    LiteralSet model;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const DefiniteRule& rule : rules) {
            if (model.count(rule.head)) continue;
            bool body_holds = true;
            for (const Literal& l : rule.body) {
                if (!model.count(l)) {
                    body_holds = false;
                    break;
                }
            }
            if (body_holds) {
                model.insert(rule.head);
                changed = true;
            }
        }
    }
    return model;
}

inline bool is_consistent(const LiteralSet& s) {
    for (const Literal& l : s)
        if (!l.strong_neg && s.count(l.complement())) return false;
    return true;
}

/// Answer set under the original semantics: a consistent model of the program
/// that reproduces itself as the least model of its own reduct.
inline bool is_brewka_answer_set(const Program& program, const LiteralSet& s) {
    if (!program.is_lpod()) throw NotAnLpodError();
    return is_consistent(s) && is_brewka_model(s, program) &&
           least_herbrand(brewka_reduct(program, s)) == s;
}

namespace detail {

inline LiteralSet decode_subset(const SigmaPtr& sigma, std::uint64_t code) {
    LiteralSet s;
    std::size_t n = sigma->size();
    for (std::size_t i = 0; i < n; ++i)
        if ((code >> (n - 1 - i)) & 1) s.insert(sigma->literals[i]);
    return s;
}

}  // namespace detail

/// All Brewka answer sets, by enumeration over the 2^|sigma| subsets. The
/// scan order mirrors enumerate_answer_sets: lexicographic over the sigma
/// order with members-first.
inline std::vector<LiteralSet> brewka_answer_sets(const Program& program,
                                                  const SearchLimits& limits = {}) {
    if (!program.is_lpod()) throw NotAnLpodError();
    std::uint64_t cap = limits.candidate_cap ? limits.candidate_cap : kDefaultThreeValuedCap;
    std::uint64_t count = detail::candidate_count(2, program.sigma->size(), cap);
    auto codes = detail::filter_codes_desc(count, limits.threads, [&](std::uint64_t code) {
        return is_brewka_answer_set(program, detail::decode_subset(program.sigma, code));
    });
    std::vector<LiteralSet> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes) out.push_back(detail::decode_subset(program.sigma, code));
    return out;
}

/// Rebuilds the unique three-valued answer set whose collapse is the Brewka
/// answer set n: literals forced to F* accumulate by iterating over the rules
/// whose better head options miss n and whose positive bodies hold modulo the
/// set gathered so far.
inline Interpretation3 lift(const Program& program, const LiteralSet& n) {
    if (!is_brewka_answer_set(program, n)) throw NotABrewkaAnswerSetError();

    LiteralSet forced;  // the F*-set under construction
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Rule& rule : program.rules) {
            bool blocked = false;
            for (const BodyLiteral& b : rule.body) {
                if (b.is_not && n.count(b.lit)) {
                    blocked = true;
                    break;
                }
                if (!b.is_not && !n.count(b.lit) && !forced.count(b.lit)) {
                    blocked = true;  // positive body not in n union forced
                    break;
                }
            }
            if (blocked) continue;
            for (const auto& level : rule.head_levels) {
                const Literal& c = level[0];
                if (n.count(c)) break;  // levels past the first satisfied one stay F
                if (forced.insert(c).second) changed = true;
            }
        }
    }

    Interpretation3 m(program.sigma, TruthValue3::F);
    for (std::size_t i = 0; i < program.sigma->size(); ++i) {
        const Literal& l = program.sigma->literals[i];
        if (n.count(l))
            m.values[i] = TruthValue3::T;
        else if (forced.count(l))
            m.values[i] = TruthValue3::Fstar;
    }
    return m;
}

}  // namespace ordis
