#pragma once

#include <cstddef>

#include "ordis/errors.hpp"
#include "ordis/formula.hpp"
#include "ordis/interpretation.hpp"
#include "ordis/syntax.hpp"
#include "ordis/truth.hpp"

namespace ordis {

/// Structural formula evaluation. The same clauses serve the three- and the
/// four-valued lattice: not yields T exactly when its argument is at most F*,
/// <- yields T exactly when the head dominates the body, & is min, v is max,
/// and * returns the right operand only when the left one is F*.
template <class V>
V eval(const Interpretation<V>& interp, const Formula& phi) {
    switch (phi.kind()) {
        case Formula::Kind::Lit:
            return interp.at(phi.literal());
        case Formula::Kind::Fstar:
            return lattice<V>::fstar;
        case Formula::Kind::Not:
            return truth_leq(eval(interp, *phi.children()[0]), lattice<V>::fstar)
                       ? lattice<V>::top
                       : lattice<V>::bottom;
        case Formula::Kind::Implies:
            return truth_leq(eval(interp, *phi.body()), eval(interp, *phi.head()))
                       ? lattice<V>::top
                       : lattice<V>::bottom;
        case Formula::Kind::And: {
            V acc = lattice<V>::top;
            for (const FormulaPtr& c : phi.children()) acc = truth_min(acc, eval(interp, *c));
            return acc;
        }
        case Formula::Kind::Or: {
            V acc = lattice<V>::bottom;
            for (const FormulaPtr& c : phi.children()) acc = truth_max(acc, eval(interp, *c));
            return acc;
        }
        case Formula::Kind::Times: {
            V acc = eval(interp, *phi.children()[0]);
            for (std::size_t i = 1; i < phi.children().size(); ++i)
                acc = times(acc, eval(interp, *phi.children()[i]));
            return acc;
        }
    }
    return lattice<V>::bottom;
}

template <class V>
V eval(const Interpretation<V>& interp, const FormulaPtr& phi) {
    return eval(interp, *phi);
}

/// Value of one head level (max over its disjuncts).
template <class V>
V eval_level(const Interpretation<V>& interp, const std::vector<Literal>& level) {
    V acc = lattice<V>::bottom;
    for (const Literal& l : level) acc = truth_max(acc, interp.at(l));
    return acc;
}

/// Value of the whole head C1 * ... * Cn.
template <class V>
V eval_head(const Interpretation<V>& interp, const Rule& rule) {
    V acc = eval_level(interp, rule.head_levels[0]);
    for (std::size_t i = 1; i < rule.head_levels.size(); ++i)
        acc = times(acc, eval_level(interp, rule.head_levels[i]));
    return acc;
}

/// Value of the body conjunction; the empty conjunction is T.
template <class V>
V eval_body(const Interpretation<V>& interp, const Rule& rule) {
    V acc = lattice<V>::top;
    for (const BodyLiteral& b : rule.body) {
        V v = interp.at(b.lit);
        if (b.is_not)
            v = truth_leq(v, lattice<V>::fstar) ? lattice<V>::top : lattice<V>::bottom;
        acc = truth_min(acc, v);
    }
    return acc;
}

/// A rule holds when head <- body evaluates to T, i.e. head >= body.
template <class V>
bool satisfies(const Interpretation<V>& interp, const Rule& rule) {
    return truth_leq(eval_body(interp, rule), eval_head(interp, rule));
}

template <class V>
bool is_model(const Interpretation<V>& interp, const Program& program) {
    require_domain(interp, program);
    for (const Rule& r : program.rules)
        if (!satisfies(interp, r)) return false;
    return true;
}

/// An interpretation is inconsistent when some atom and its strong negation
/// are both T.
template <class V>
bool is_consistent(const Interpretation<V>& interp) {
    for (std::size_t i = 0; i < interp.size(); ++i) {
        if (interp.values[i] != lattice<V>::top) continue;
        const Literal& l = interp.sigma->literals[i];
        if (l.strong_neg) continue;  // each conflicting pair is checked once
        auto pos = interp.sigma->position(l.complement());
        if (pos && interp.values[*pos] == lattice<V>::top) return false;
    }
    return true;
}

/// Two-valued model check for the original LPOD semantics: whenever the body
/// holds in S, some head literal must be in S.
inline bool is_brewka_model(const LiteralSet& s, const Program& program) {
    if (!program.is_lpod()) throw NotAnLpodError();
    for (const Rule& rule : program.rules) {
        bool body_holds = true;
        for (const BodyLiteral& b : rule.body) {
            if (b.is_not == (s.count(b.lit) != 0)) {
                body_holds = false;
                break;
            }
        }
        if (!body_holds) continue;
        bool head_hit = false;
        for (const auto& level : rule.head_levels) {
            if (s.count(level[0])) {
                head_hit = true;
                break;
            }
        }
        if (!head_hit) return false;
    }
    return true;
}

/// The rule as a single formula head <- body (used to cross-check the direct
/// rule evaluation in tests).
inline FormulaPtr rule_to_formula(const Rule& rule) {
    std::vector<FormulaPtr> levels;
    for (const auto& level : rule.head_levels) {
        if (level.size() == 1) {
            levels.push_back(Formula::lit(level[0]));
        } else {
            std::vector<FormulaPtr> lits;
            for (const Literal& l : level) lits.push_back(Formula::lit(l));
            levels.push_back(Formula::disj(std::move(lits)));
        }
    }
    FormulaPtr head = levels.size() == 1 ? levels[0] : Formula::times(std::move(levels));
    if (rule.body.empty()) return head;
    std::vector<FormulaPtr> items;
    for (const BodyLiteral& b : rule.body) {
        FormulaPtr f = Formula::lit(b.lit);
        if (b.is_not) f = Formula::negation(std::move(f));
        items.push_back(std::move(f));
    }
    FormulaPtr body = items.size() == 1 ? items[0] : Formula::conj(std::move(items));
    return Formula::implies(std::move(head), std::move(body));
}

}  // namespace ordis
