#pragma once

#include <cstddef>
#include <vector>

#include "ordis/errors.hpp"
#include "ordis/eval.hpp"
#include "ordis/interpretation.hpp"
#include "ordis/syntax.hpp"

namespace ordis {

/// One rule of a x-reduct: a single head level, a negation-free positive
/// body, and optionally the F* constant in the body. Guarded rules can force
/// at most F* for their head.
struct ReductRule {
    std::vector<Literal> head_level;
    bool fstar_guard = false;
    std::vector<Literal> body;

    bool operator==(const ReductRule&) const = default;
};

struct ReductProgram {
    std::vector<ReductRule> rules;
    SigmaPtr sigma;
};

/// Value of a reduct rule body under an interpretation: the F* guard joins the
/// conjunction as the constant F*; the empty unguarded body is T.
inline TruthValue3 reduct_body_value(const Interpretation3& interp, const ReductRule& rule) {
    TruthValue3 acc = rule.fstar_guard ? TruthValue3::Fstar : TruthValue3::T;
    for (const Literal& l : rule.body) acc = truth_min(acc, interp.at(l));
    return acc;
}

inline bool satisfies(const Interpretation3& interp, const ReductRule& rule) {
    return truth_leq(reduct_body_value(interp, rule), eval_level(interp, rule.head_level));
}

inline bool is_model(const Interpretation3& interp, const ReductProgram& reduct) {
    for (const ReductRule& r : reduct.rules)
        if (!satisfies(interp, r)) return false;
    return true;
}

/// The x-reduct of a program with respect to a three-valued interpretation.
/// Per rule: a default-negated literal that is T cancels the rule; otherwise
/// with r the least index such that levels 1..r-1 evaluate to F* and either
/// r = n or level r does not, the reduct holds one F*-guarded rule per level
/// before r and one unguarded rule for level r.
inline ReductProgram x_reduct(const Program& program, const Interpretation3& interp) {
    require_domain(interp, program);
    ReductProgram reduct;
    reduct.sigma = program.sigma;
    for (const Rule& rule : program.rules) {
        bool cancelled = false;
        for (const BodyLiteral& b : rule.body) {
            if (b.is_not && interp.at(b.lit) == TruthValue3::T) {
                cancelled = true;
                break;
            }
        }
        if (cancelled) continue;

        std::vector<Literal> body_pos = rule.body_pos();
        std::size_t n = rule.head_levels.size();
        std::size_t r = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (eval_level(interp, rule.head_levels[i]) != TruthValue3::Fstar) {
                r = i + 1;
                break;
            }
        }
        for (std::size_t i = 0; i + 1 < r; ++i)
            reduct.rules.push_back(ReductRule{rule.head_levels[i], true, body_pos});
        reduct.rules.push_back(ReductRule{rule.head_levels[r - 1], false, body_pos});
    }
    return reduct;
}

/// A definite rule of the original (Brewka) reduct: single head literal,
/// positive two-valued body.
struct DefiniteRule {
    Literal head;
    std::vector<Literal> body;

    bool operator==(const DefiniteRule&) const = default;
};

/// The original reduct of an LPOD with respect to a set of literals: for each
/// rule, the head literal C_i lands in the reduct exactly when C_i is in S
/// and neither an earlier head literal nor a default-negated body literal is.
inline std::vector<DefiniteRule> brewka_reduct(const Program& program, const LiteralSet& s) {
    if (!program.is_lpod()) throw NotAnLpodError();
    std::vector<DefiniteRule> reduct;
    for (const Rule& rule : program.rules) {
        bool blocked = false;
        for (const BodyLiteral& b : rule.body) {
            if (b.is_not && s.count(b.lit)) {
                blocked = true;
                break;
            }
        }
        if (blocked) continue;
        std::vector<Literal> body_pos = rule.body_pos();
        for (const auto& level : rule.head_levels) {
            const Literal& c = level[0];
            if (s.count(c)) {
                reduct.push_back(DefiniteRule{c, body_pos});
                break;  // earlier heads in S block every later choice
            }
        }
    }
    return reduct;
}

}  // namespace ordis
