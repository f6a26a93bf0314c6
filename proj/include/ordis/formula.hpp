#pragma once

#include <cassert>
#include <memory>
#include <utility>
#include <vector>

#include "ordis/literal.hpp"

namespace ordis {

/// Immutable formula tree over literals, the F* constant, and the connectives
/// not, and, or, <-, and ordered disjunction. And/or/times nodes are n-ary;
/// the parser flattens nested runs of the same connective (all three are
/// associative), while hand-built trees may nest them freely.
class Formula {
public:
    enum class Kind { Lit, Fstar, Not, And, Or, Times, Implies };

    using Ptr = std::shared_ptr<const Formula>;

    Kind kind() const { return kind_; }
    const Literal& literal() const { return lit_; }
    const std::vector<Ptr>& children() const { return children_; }

    const Ptr& head() const { return children_[0]; }  // Implies only
    const Ptr& body() const { return children_[1]; }  // Implies only

    static Ptr lit(Literal l) {
        return make(Kind::Lit, std::move(l), {});
    }
    static Ptr fstar() { return make(Kind::Fstar, {}, {}); }
    static Ptr negation(Ptr f) { return make(Kind::Not, {}, {std::move(f)}); }
    static Ptr conj(std::vector<Ptr> children) {
        assert(children.size() >= 2);
        return make(Kind::And, {}, std::move(children));
    }
    static Ptr disj(std::vector<Ptr> children) {
        assert(children.size() >= 2);
        return make(Kind::Or, {}, std::move(children));
    }
    static Ptr times(std::vector<Ptr> children) {
        assert(children.size() >= 2);
        return make(Kind::Times, {}, std::move(children));
    }
    static Ptr implies(Ptr head, Ptr body) {
        return make(Kind::Implies, {}, {std::move(head), std::move(body)});
    }

    bool operator==(const Formula& other) const {
        if (kind_ != other.kind_) return false;
        if (kind_ == Kind::Lit) return lit_ == other.lit_;
        if (children_.size() != other.children_.size()) return false;
        for (std::size_t i = 0; i < children_.size(); ++i)
            if (!(*children_[i] == *other.children_[i])) return false;
        return true;
    }

    /// Distinct literal leaves in first-occurrence order.
    std::vector<Literal> variables() const {
        std::vector<Literal> out;
        collect_variables(out);
        return out;
    }

private:
    static Ptr make(Kind kind, Literal lit, std::vector<Ptr> children) {
        auto f = std::make_shared<Formula>();
        f->kind_ = kind;
        f->lit_ = std::move(lit);
        f->children_ = std::move(children);
        return f;
    }

    void collect_variables(std::vector<Literal>& out) const {
        if (kind_ == Kind::Lit) {
            for (const Literal& seen : out)
                if (seen == lit_) return;
            out.push_back(lit_);
            return;
        }
        for (const Ptr& c : children_) c->collect_variables(out);
    }

    Kind kind_ = Kind::Fstar;
    Literal lit_;
    std::vector<Ptr> children_;

public:
    Formula() = default;  // prefer the static builders
};

using FormulaPtr = Formula::Ptr;

}  // namespace ordis
