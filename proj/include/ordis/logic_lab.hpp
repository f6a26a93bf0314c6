#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordis/errors.hpp"
#include "ordis/eval.hpp"
#include "ordis/formula.hpp"
#include "ordis/interpretation.hpp"

namespace ordis {

constexpr std::size_t kMaxTableVariables = 8;

struct TruthTableRow {
    std::vector<TruthValue4> inputs;
    TruthValue4 value;
};

struct TruthTable {
    std::vector<Literal> variables;
    std::vector<TruthTableRow> rows;
};

namespace detail {

inline std::uint64_t table_size(std::size_t variable_count) {
    if (variable_count > kMaxTableVariables)
        throw TooManyVariablesError(variable_count, kMaxTableVariables);
    return UINT64_C(1) << (2 * variable_count);  // 4^k
}

inline Interpretation4 assignment_at(const SigmaPtr& sigma, std::uint64_t code) {
    Interpretation4 interp(sigma);
    for (std::size_t i = sigma->size(); i-- > 0;) {
        interp.values[i] = value_at<TruthValue4>(static_cast<int>(code & 3));
        code >>= 2;
    }
    return interp;
}

}  // namespace detail

/// Exhaustive four-valued table of a formula with at most eight distinct
/// literals. Rows are ordered lexicographically over the variable order with
/// F < F* < T* < T, first variable most significant.
inline TruthTable truth_table(const Formula& phi) {
    TruthTable table;
    table.variables = phi.variables();
    std::uint64_t rows = detail::table_size(table.variables.size());
    SigmaPtr sigma = Sigma::make(table.variables);
    for (std::uint64_t code = 0; code < rows; ++code) {
        Interpretation4 assignment = detail::assignment_at(sigma, code);
        table.rows.push_back(TruthTableRow{assignment.values, eval(assignment, phi)});
    }
    return table;
}

inline TruthTable truth_table(const FormulaPtr& phi) { return truth_table(*phi); }

struct Counterexample {
    std::vector<Literal> variables;
    std::vector<TruthValue4> assignment;
    TruthValue4 lhs;
    TruthValue4 rhs;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < variables.size(); ++i) {
            if (i) out += " ";
            out += variables[i].to_string() + "=" + ordis::to_string(assignment[i]);
        }
        return out;
    }
};

struct EquivalenceResult {
    bool equivalent;
    std::optional<Counterexample> counterexample;
};

/// Tests four-valued equivalence over the joint variable set (matched by
/// name, ordered by first occurrence in lhs then rhs). On failure reports the
/// first differing assignment in the candidate scan order, which runs from
/// the all-T assignment downward.
inline EquivalenceResult check_equivalence(const Formula& lhs, const Formula& rhs) {
    std::vector<Literal> variables = lhs.variables();
    for (const Literal& l : rhs.variables()) {
        bool seen = false;
        for (const Literal& known : variables)
            if (known == l) {
                seen = true;
                break;
            }
        if (!seen) variables.push_back(l);
    }
    std::uint64_t rows = detail::table_size(variables.size());
    SigmaPtr sigma = Sigma::make(variables);
    for (std::uint64_t code = rows; code-- > 0;) {
        Interpretation4 assignment = detail::assignment_at(sigma, code);
        TruthValue4 a = eval(assignment, lhs);
        TruthValue4 b = eval(assignment, rhs);
        if (a != b)
            return EquivalenceResult{false,
                                     Counterexample{variables, assignment.values, a, b}};
    }
    return EquivalenceResult{true, std::nullopt};
}

inline EquivalenceResult check_equivalence(const FormulaPtr& lhs, const FormulaPtr& rhs) {
    return check_equivalence(*lhs, *rhs);
}

}  // namespace ordis
