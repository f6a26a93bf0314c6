#pragma once

#include <string>

#include "ordis/formula.hpp"
#include "ordis/reduct.hpp"
#include "ordis/syntax.hpp"

namespace ordis {

inline std::string render_level(const std::vector<Literal>& level, bool force_parens) {
    std::string out;
    bool parens = force_parens && level.size() > 1;
    if (parens) out += "(";
    for (std::size_t i = 0; i < level.size(); ++i) {
        if (i) out += " v ";
        out += level[i].to_string();
    }
    if (parens) out += ")";
    return out;
}

inline std::string render_rule(const Rule& rule) {
    std::string out;
    for (std::size_t i = 0; i < rule.head_levels.size(); ++i) {
        if (i) out += " * ";
        out += render_level(rule.head_levels[i], rule.head_levels.size() > 1);
    }
    if (!rule.body.empty()) {
        out += " :- ";
        for (std::size_t i = 0; i < rule.body.size(); ++i) {
            if (i) out += ", ";
            if (rule.body[i].is_not) out += "not ";
            out += rule.body[i].lit.to_string();
        }
    }
    return out + ".";
}

inline std::string render_program(const Program& program) {
    std::string out;
    for (const Rule& r : program.rules) {
        out += render_rule(r);
        out += "\n";
    }
    return out;
}

/// Debug rendering of reduct rules; "F*" marks the guarded body constant.
inline std::string render_reduct_rule(const ReductRule& rule) {
    std::string out = render_level(rule.head_level, /*force_parens=*/false);
    if (rule.fstar_guard || !rule.body.empty()) {
        out += " :- ";
        bool first = true;
        if (rule.fstar_guard) {
            out += "F*";
            first = false;
        }
        for (const Literal& l : rule.body) {
            if (!first) out += ", ";
            out += l.to_string();
            first = false;
        }
    }
    return out + ".";
}

inline std::string render_reduct(const ReductProgram& reduct) {
    std::string out;
    for (const ReductRule& r : reduct.rules) {
        out += render_reduct_rule(r);
        out += "\n";
    }
    return out;
}

namespace detail {

inline int formula_precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Implies: return 0;
        case Formula::Kind::Times: return 1;
        case Formula::Kind::Or: return 2;
        case Formula::Kind::And: return 3;
        case Formula::Kind::Not: return 4;
        default: return 5;
    }
}

inline std::string render_formula_prec(const Formula& f, int parent_prec) {
    int prec = formula_precedence(f.kind());
    std::string out;
    switch (f.kind()) {
        case Formula::Kind::Lit: out = f.literal().to_string(); break;
        case Formula::Kind::Fstar: out = "F*"; break;
        case Formula::Kind::Not:
            out = "not " + render_formula_prec(*f.children()[0], prec);
            break;
        case Formula::Kind::Implies:
            out = render_formula_prec(*f.head(), prec + 1) + " <- " +
                  render_formula_prec(*f.body(), prec + 1);
            break;
        default: {
            const char* op = f.kind() == Formula::Kind::And  ? " & "
                             : f.kind() == Formula::Kind::Or ? " v "
                                                             : " * ";
            for (std::size_t i = 0; i < f.children().size(); ++i) {
                if (i) out += op;
                out += render_formula_prec(*f.children()[i], prec + 1);
            }
            break;
        }
    }
    if (prec < parent_prec) return "(" + out + ")";
    return out;
}

}  // namespace detail

inline std::string render_formula(const Formula& f) {
    return detail::render_formula_prec(f, 0);
}

inline std::string render_formula(const FormulaPtr& f) { return render_formula(*f); }

}  // namespace ordis
