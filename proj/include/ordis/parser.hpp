#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "ordis/errors.hpp"
#include "ordis/formula.hpp"
#include "ordis/syntax.hpp"

namespace ordis {

namespace detail {

enum class TokenKind {
    Ident,
    KwNot,    // "not"
    KwOr,     // "v"
    Fstar,    // "F*" (formula mode only)
    Star,     // "*"
    Amp,      // "&"
    Dash,     // "-"
    Comma,    // ","
    Dot,      // "."
    LParen,   // "("
    RParen,   // ")"
    RuleArrow,     // ":-"
    FormulaArrow,  // "<-"
    End,
};

struct Token {
    TokenKind kind;
    std::string text;
    int line;
    int column;
};

inline const char* token_name(TokenKind k) {
    switch (k) {
        case TokenKind::Ident: return "identifier";
        case TokenKind::KwNot: return "'not'";
        case TokenKind::KwOr: return "'v'";
        case TokenKind::Fstar: return "'F*'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Amp: return "'&'";
        case TokenKind::Dash: return "'-'";
        case TokenKind::Comma: return "','";
        case TokenKind::Dot: return "'.'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::RuleArrow: return "':-'";
        case TokenKind::FormulaArrow: return "'<-'";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

/// Shared tokenizer for the program grammar and the formula grammar. In
/// formula mode "F" immediately followed by "*" lexes as the F* constant; in
/// program mode "F" stays an ordinary atom.
class Lexer {
public:
    Lexer(std::string text, bool formula_mode)
        : text_(std::move(text)), formula_mode_(formula_mode) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_trivia();
            int line = line_, col = column_;
            if (pos_ >= text_.size()) {
                tokens.push_back({TokenKind::End, "", line, col});
                return tokens;
            }
            char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word = read_word();
                if (word == "not") {
                    tokens.push_back({TokenKind::KwNot, word, line, col});
                } else if (word == "v") {
                    tokens.push_back({TokenKind::KwOr, word, line, col});
                } else if (formula_mode_ && word == "F" && pos_ < text_.size() &&
                           text_[pos_] == '*') {
                    advance();
                    tokens.push_back({TokenKind::Fstar, "F*", line, col});
                } else {
                    tokens.push_back({TokenKind::Ident, word, line, col});
                }
                continue;
            }
            switch (c) {
                case '*': advance(); tokens.push_back({TokenKind::Star, "*", line, col}); break;
                case '&': advance(); tokens.push_back({TokenKind::Amp, "&", line, col}); break;
                case '-': advance(); tokens.push_back({TokenKind::Dash, "-", line, col}); break;
                case ',': advance(); tokens.push_back({TokenKind::Comma, ",", line, col}); break;
                case '.': advance(); tokens.push_back({TokenKind::Dot, ".", line, col}); break;
                case '(': advance(); tokens.push_back({TokenKind::LParen, "(", line, col}); break;
                case ')': advance(); tokens.push_back({TokenKind::RParen, ")", line, col}); break;
                case ':':
                    advance();
                    if (pos_ < text_.size() && text_[pos_] == '-') {
                        advance();
                        tokens.push_back({TokenKind::RuleArrow, ":-", line, col});
                    } else {
                        throw SyntaxError(line, col, "expected ':-'");
                    }
                    break;
                case '<':
                    advance();
                    if (pos_ < text_.size() && text_[pos_] == '-') {
                        advance();
                        tokens.push_back({TokenKind::FormulaArrow, "<-", line, col});
                    } else {
                        throw SyntaxError(line, col, "expected '<-'");
                    }
                    break;
                default:
                    throw SyntaxError(line, col,
                                      std::string("unexpected character '") + c + "'");
            }
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    std::string read_word() {
        std::string word;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                word += c;
                advance();
            } else {
                break;
            }
        }
        return word;
    }

    std::string text_;
    bool formula_mode_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool at(TokenKind k) const { return peek().kind == k; }

    bool accept(TokenKind k) {
        if (!at(k)) return false;
        next();
        return true;
    }

    const Token& expect(TokenKind k, const std::string& context) {
        if (!at(k)) fail(std::string("expected ") + token_name(k) + " " + context);
        return next();
    }

    [[noreturn]] void fail(const std::string& message) const {
        const Token& t = peek();
        throw SyntaxError(t.line, t.column,
                          message + ", found " + std::string(token_name(t.kind)));
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

/// Parses [ "-" ] identifier.
inline Literal parse_literal(TokenStream& ts, const std::string& context) {
    bool strong = ts.accept(TokenKind::Dash);
    if (!ts.at(TokenKind::Ident))
        ts.fail("expected " + std::string(strong ? "identifier" : "literal") + " " + context);
    return Literal(ts.next().text, strong);
}

struct ParsedLevel {
    std::vector<Literal> literals;
    bool parenthesized;
    int line;
    int column;
};

inline ParsedLevel parse_head_level(TokenStream& ts) {
    ParsedLevel level;
    level.line = ts.peek().line;
    level.column = ts.peek().column;
    level.parenthesized = ts.accept(TokenKind::LParen);
    if (level.parenthesized && ts.at(TokenKind::RParen))
        throw EmptyDisjunctError(ts.peek().line, ts.peek().column);
    level.literals.push_back(parse_literal(ts, "in rule head"));
    while (ts.accept(TokenKind::KwOr))
        level.literals.push_back(parse_literal(ts, "after 'v'"));
    if (level.parenthesized) ts.expect(TokenKind::RParen, "to close the head level");
    return level;
}

inline Rule parse_rule(TokenStream& ts) {
    if (ts.at(TokenKind::RuleArrow) || ts.at(TokenKind::Dot))
        throw EmptyHeadError(ts.peek().line, ts.peek().column);

    std::vector<ParsedLevel> levels;
    levels.push_back(parse_head_level(ts));
    while (ts.accept(TokenKind::Star)) levels.push_back(parse_head_level(ts));

    // A bare disjunction is only unambiguous when it is the entire head.
    if (levels.size() > 1) {
        for (const ParsedLevel& level : levels) {
            if (level.literals.size() > 1 && !level.parenthesized)
                throw SyntaxError(level.line, level.column,
                                  "disjunctive level in a multi-level head must be "
                                  "parenthesized");
        }
    }

    Rule rule;
    for (ParsedLevel& level : levels) rule.head_levels.push_back(std::move(level.literals));

    if (ts.accept(TokenKind::RuleArrow)) {
        do {
            BodyLiteral item;
            item.is_not = ts.accept(TokenKind::KwNot);
            item.lit = parse_literal(ts, "in rule body");
            rule.body.push_back(std::move(item));
        } while (ts.accept(TokenKind::Comma));
    }
    ts.expect(TokenKind::Dot, "to terminate the rule");
    return rule;
}

// Formula grammar, loosest to tightest: <-  then *  then v  then &  then not.
inline FormulaPtr parse_formula_expr(TokenStream& ts);

inline FormulaPtr parse_formula_primary(TokenStream& ts) {
    if (ts.accept(TokenKind::LParen)) {
        FormulaPtr inner = parse_formula_expr(ts);
        ts.expect(TokenKind::RParen, "to close the parenthesized formula");
        return inner;
    }
    if (ts.accept(TokenKind::Fstar)) return Formula::fstar();
    if (ts.at(TokenKind::Ident) || ts.at(TokenKind::Dash))
        return Formula::lit(parse_literal(ts, "in formula"));
    ts.fail("expected literal, 'F*', 'not', or '('");
}

inline FormulaPtr parse_formula_unary(TokenStream& ts) {
    if (ts.accept(TokenKind::KwNot)) return Formula::negation(parse_formula_unary(ts));
    return parse_formula_primary(ts);
}

// Same-connective children fold into one n-ary node.
inline void append_flattened(std::vector<FormulaPtr>& parts, FormulaPtr f, Formula::Kind kind) {
    if (f->kind() == kind) {
        for (const FormulaPtr& c : f->children()) parts.push_back(c);
    } else {
        parts.push_back(std::move(f));
    }
}

template <class Sub>
FormulaPtr parse_nary(TokenStream& ts, TokenKind op, Formula::Kind kind, Sub sub) {
    FormulaPtr first = sub(ts);
    if (!ts.at(op)) return first;
    std::vector<FormulaPtr> parts;
    append_flattened(parts, std::move(first), kind);
    while (ts.accept(op)) append_flattened(parts, sub(ts), kind);
    switch (kind) {
        case Formula::Kind::And: return Formula::conj(std::move(parts));
        case Formula::Kind::Or: return Formula::disj(std::move(parts));
        default: return Formula::times(std::move(parts));
    }
}

inline FormulaPtr parse_formula_and(TokenStream& ts) {
    return parse_nary(ts, TokenKind::Amp, Formula::Kind::And, parse_formula_unary);
}

inline FormulaPtr parse_formula_or(TokenStream& ts) {
    return parse_nary(ts, TokenKind::KwOr, Formula::Kind::Or, parse_formula_and);
}

inline FormulaPtr parse_formula_times(TokenStream& ts) {
    return parse_nary(ts, TokenKind::Star, Formula::Kind::Times, parse_formula_or);
}

inline FormulaPtr parse_formula_expr(TokenStream& ts) {
    FormulaPtr lhs = parse_formula_times(ts);
    while (ts.accept(TokenKind::FormulaArrow)) {
        FormulaPtr rhs = parse_formula_times(ts);
        lhs = Formula::implies(std::move(lhs), std::move(rhs));
    }
    return lhs;
}

}  // namespace detail

/// Parses program text per the .lpod grammar. Comments run from '%' to end of
/// line; rules end with '.'.
inline Program parse_program(const std::string& text) {
    detail::TokenStream ts(detail::Lexer(text, /*formula_mode=*/false).run());
    std::vector<Rule> rules;
    while (!ts.at(detail::TokenKind::End)) rules.push_back(detail::parse_rule(ts));
    return Program::from_rules(std::move(rules));
}

/// Parses a single formula over literals, "F*", not, &, v, *, <- and parens.
inline FormulaPtr parse_formula(const std::string& text) {
    detail::TokenStream ts(detail::Lexer(text, /*formula_mode=*/true).run());
    FormulaPtr f = detail::parse_formula_expr(ts);
    if (!ts.at(detail::TokenKind::End)) ts.fail("expected end of formula");
    return f;
}

}  // namespace ordis
