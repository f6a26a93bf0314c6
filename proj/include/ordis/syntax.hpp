#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ordis/literal.hpp"

namespace ordis {

/// The literal universe of a program, in first-occurrence order.
struct Sigma {
    std::vector<Literal> literals;
    std::unordered_map<Literal, std::size_t, LiteralHash> index;

    static std::shared_ptr<const Sigma> make(const std::vector<Literal>& occurrence_order) {
        auto sigma = std::make_shared<Sigma>();
        for (const Literal& l : occurrence_order) {
            if (sigma->index.emplace(l, sigma->literals.size()).second) {
                sigma->literals.push_back(l);
            }
        }
        return sigma;
    }

    std::size_t size() const { return literals.size(); }

    std::optional<std::size_t> position(const Literal& l) const {
        auto it = index.find(l);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const Literal& l) const { return index.count(l) != 0; }

    bool operator==(const Sigma& other) const { return literals == other.literals; }
};

using SigmaPtr = std::shared_ptr<const Sigma>;

inline bool same_domain(const SigmaPtr& a, const SigmaPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// One body member as written: a literal, possibly under default negation.
struct BodyLiteral {
    Literal lit;
    bool is_not = false;

    bool operator==(const BodyLiteral&) const = default;
};

/// A rule C11 v .. * C21 v .. * ... :- A1, ..., not B1, ...
/// The head is a sequence of choice levels in decreasing preference; each
/// level is a disjunction of equally preferred literals.
struct Rule {
    std::vector<std::vector<Literal>> head_levels;
    std::vector<BodyLiteral> body;

    bool is_lpod_rule() const {
        for (const auto& level : head_levels)
            if (level.size() != 1) return false;
        return true;
    }

    bool is_fact() const { return body.empty(); }

    std::vector<Literal> body_pos() const {
        std::vector<Literal> out;
        for (const auto& b : body)
            if (!b.is_not) out.push_back(b.lit);
        return out;
    }

    std::vector<Literal> body_neg() const {
        std::vector<Literal> out;
        for (const auto& b : body)
            if (b.is_not) out.push_back(b.lit);
        return out;
    }

    bool operator==(const Rule&) const = default;
};

struct Program {
    std::vector<Rule> rules;
    SigmaPtr sigma;

    bool is_lpod() const {
        for (const Rule& r : rules)
            if (!r.is_lpod_rule()) return false;
        return true;
    }

    /// Builds a program and derives sigma by scanning each rule in textual
    /// order: head levels left to right, then body items as written.
    static Program from_rules(std::vector<Rule> rules) {
        std::vector<Literal> occurrence;
        for (const Rule& r : rules) {
            for (const auto& level : r.head_levels)
                for (const Literal& l : level) occurrence.push_back(l);
            for (const BodyLiteral& b : r.body) occurrence.push_back(b.lit);
        }
        Program p;
        p.rules = std::move(rules);
        p.sigma = Sigma::make(occurrence);
        return p;
    }

    bool operator==(const Program& other) const {
        return rules == other.rules && same_domain(sigma, other.sigma);
    }
};

// Convenience builders used throughout the test suites.
inline Rule fact(std::vector<std::vector<Literal>> head_levels) {
    return Rule{std::move(head_levels), {}};
}

inline Rule lpod_rule(std::vector<Literal> choice, std::vector<BodyLiteral> body = {}) {
    Rule r;
    for (Literal& l : choice) r.head_levels.push_back({std::move(l)});
    r.body = std::move(body);
    return r;
}

}  // namespace ordis
