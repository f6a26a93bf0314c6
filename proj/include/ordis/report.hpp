#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordis/answer_sets.hpp"
#include "ordis/brewka.hpp"
#include "ordis/characterization.hpp"
#include "ordis/preference.hpp"
#include "ordis/syntax.hpp"

namespace ordis {

using Json = nlohmann::ordered_json;

/// Result of a solve under the three-valued semantics (reduct route or the
/// four-valued oracle): all answer sets plus the indices of the most
/// preferred ones.
struct NewSolve {
    std::vector<Interpretation3> answer_sets;
    std::vector<std::size_t> preferred;
};

inline NewSolve solve_new(const Program& program, const SearchLimits& limits = {}) {
    NewSolve out;
    out.answer_sets = enumerate_answer_sets(program, limits);
    out.preferred = most_preferred_indices(out.answer_sets);
    return out;
}

inline NewSolve solve_oracle(const Program& program, const SearchLimits& limits = {}) {
    NewSolve out;
    out.answer_sets = answer_sets_oracle(program, limits);
    out.preferred = most_preferred_indices(out.answer_sets);
    return out;
}

/// Result of a solve under the original semantics: Brewka answer sets,
/// per-rule satisfaction degrees, and the inclusion-most-preferred indices.
struct BrewkaSolve {
    std::vector<LiteralSet> answer_sets;
    std::vector<std::vector<int>> degrees;  // one row per answer set, rule order
    std::vector<std::size_t> preferred;
};

inline BrewkaSolve solve_brewka(const Program& program, const SearchLimits& limits = {}) {
    BrewkaSolve out;
    out.answer_sets = brewka_answer_sets(program, limits);
    for (const LiteralSet& s : out.answer_sets) {
        std::vector<int> row;
        for (const Rule& r : program.rules) row.push_back(degree(s, r));
        out.degrees.push_back(std::move(row));
    }
    out.preferred = brewka_most_preferred_indices(program, out.answer_sets);
    return out;
}

namespace detail {

inline std::vector<std::string> sorted_names(const LiteralSet& s) {
    std::vector<std::string> names;
    for (const Literal& l : s) names.push_back(l.to_string());
    std::sort(names.begin(), names.end());
    return names;
}

inline bool contains_index(const std::vector<std::size_t>& v, std::size_t i) {
    return std::find(v.begin(), v.end(), i) != v.end();
}

}  // namespace detail

inline Json answer_set_json(const Interpretation3& m, bool most_preferred) {
    Json report;
    Json assignment = Json::object();
    for (std::size_t i = 0; i < m.size(); ++i)
        assignment[m.sigma->literals[i].to_string()] = to_string(m.values[i]);
    report["assignment"] = std::move(assignment);
    report["fstar_set"] = detail::sorted_names(fstar_set(m));
    report["collapse"] = detail::sorted_names(collapse(m));
    report["most_preferred"] = most_preferred;
    return report;
}

inline Json report_json(const std::string& program_label, const std::string& semantics,
                        const Program& program, const NewSolve& solve) {
    Json j;
    j["program"] = program_label;
    j["semantics"] = semantics;
    Json sigma = Json::array();
    for (const Literal& l : program.sigma->literals) sigma.push_back(l.to_string());
    j["sigma"] = std::move(sigma);
    Json sets = Json::array();
    for (std::size_t i = 0; i < solve.answer_sets.size(); ++i)
        sets.push_back(
            answer_set_json(solve.answer_sets[i], detail::contains_index(solve.preferred, i)));
    j["answer_sets"] = std::move(sets);
    j["most_preferred_indices"] = solve.preferred;
    return j;
}

inline Json report_json(const std::string& program_label, const Program& program,
                        const BrewkaSolve& solve) {
    Json j;
    j["program"] = program_label;
    j["semantics"] = "brewka";
    Json sigma = Json::array();
    for (const Literal& l : program.sigma->literals) sigma.push_back(l.to_string());
    j["sigma"] = std::move(sigma);
    Json sets = Json::array();
    for (std::size_t i = 0; i < solve.answer_sets.size(); ++i) {
        const LiteralSet& s = solve.answer_sets[i];
        Json report;
        Json assignment = Json::object();
        for (const Literal& l : program.sigma->literals)
            assignment[l.to_string()] = s.count(l) ? "T" : "F";
        report["assignment"] = std::move(assignment);
        report["fstar_set"] = Json::array();
        report["collapse"] = detail::sorted_names(s);
        report["most_preferred"] = detail::contains_index(solve.preferred, i);
        Json degrees = Json::object();
        for (std::size_t r = 0; r < solve.degrees[i].size(); ++r)
            degrees[std::to_string(r + 1)] = solve.degrees[i][r];
        report["brewka_degrees"] = std::move(degrees);
        sets.push_back(std::move(report));
    }
    j["answer_sets"] = std::move(sets);
    j["most_preferred_indices"] = solve.preferred;
    return j;
}

/// Most-preferred collapses under both semantics plus the agreement verdict.
struct CompareOutcome {
    std::vector<LiteralSet> preferred_new;     // collapses of the new most preferred
    std::vector<LiteralSet> preferred_brewka;  // inclusion-most-preferred sets
    bool agrees = false;
};

inline CompareOutcome compare_semantics(const Program& program, const SearchLimits& limits = {}) {
    CompareOutcome out;
    NewSolve fresh = solve_new(program, limits);
    for (std::size_t i : fresh.preferred) out.preferred_new.push_back(collapse(fresh.answer_sets[i]));
    out.preferred_brewka = brewka_most_preferred(program, limits);

    std::vector<LiteralSet> lhs = out.preferred_new;
    std::vector<LiteralSet> rhs = out.preferred_brewka;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    out.agrees = lhs == rhs;
    return out;
}

// Plain-text rendering used by the command line front end.

inline void print_answer_set_text(std::ostream& os, std::size_t index, const Interpretation3& m,
                                  bool most_preferred) {
    os << "answer set " << (index + 1) << (most_preferred ? "  [most preferred]" : "") << "\n  ";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << " ";
        os << m.sigma->literals[i].to_string() << "=" << to_string(m.values[i]);
    }
    os << "\n  F*-set: " << to_string(fstar_set(m)) << "  collapse: " << to_string(collapse(m))
       << "\n";
}

inline void print_new_solve_text(std::ostream& os, const std::string& semantics,
                                 const NewSolve& solve) {
    os << solve.answer_sets.size() << " answer set" << (solve.answer_sets.size() == 1 ? "" : "s")
       << " (semantics: " << semantics << ")\n";
    for (std::size_t i = 0; i < solve.answer_sets.size(); ++i)
        print_answer_set_text(os, i, solve.answer_sets[i],
                              detail::contains_index(solve.preferred, i));
}

inline void print_brewka_solve_text(std::ostream& os, const BrewkaSolve& solve) {
    os << solve.answer_sets.size() << " answer set" << (solve.answer_sets.size() == 1 ? "" : "s")
       << " (semantics: brewka)\n";
    for (std::size_t i = 0; i < solve.answer_sets.size(); ++i) {
        os << "answer set " << (i + 1)
           << (detail::contains_index(solve.preferred, i) ? "  [most preferred]" : "") << "\n  "
           << to_string(solve.answer_sets[i]) << "\n  degrees:";
        for (std::size_t r = 0; r < solve.degrees[i].size(); ++r)
            os << " rule" << (r + 1) << "=" << solve.degrees[i][r];
        os << "\n";
    }
}

inline void print_compare_text(std::ostream& os, const CompareOutcome& outcome) {
    os << "new semantics, most preferred (collapses):";
    for (const LiteralSet& s : outcome.preferred_new) os << " " << to_string(s);
    os << "\nbrewka semantics, most preferred:";
    for (const LiteralSet& s : outcome.preferred_brewka) os << " " << to_string(s);
    os << "\n" << (outcome.agrees ? "AGREES" : "DIVERGES") << "\n";
}

}  // namespace ordis
