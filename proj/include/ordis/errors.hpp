#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordis {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Parse failure, carries a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(int line, int column, const std::string& message)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + message),
          line_(line),
          column_(column),
          message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

class EmptyHeadError : public SyntaxError {
public:
    EmptyHeadError(int line, int column) : SyntaxError(line, column, "rule head is empty") {}
};

class EmptyDisjunctError : public SyntaxError {
public:
    EmptyDisjunctError(int line, int column)
        : SyntaxError(line, column, "head level holds no literal") {}
};

/// Two interpretations (or an interpretation and a program) disagree on the
/// underlying literal universe, or a literal outside the universe was queried.
class DomainMismatchError : public Error {
public:
    explicit DomainMismatchError(const std::string& what) : Error(what) {}
};

/// An operation restricted to LPODs was handed a program with a disjunctive
/// head level.
class NotAnLpodError : public Error {
public:
    NotAnLpodError() : Error("operation requires an LPOD (single-literal head levels)") {}
};

/// least_model was handed a reduct with a non-singleton head level.
class DisjunctiveReductError : public Error {
public:
    DisjunctiveReductError()
        : Error("least model is only defined for reducts with singleton head levels") {}
};

class BudgetExceededError : public Error {
public:
    BudgetExceededError(std::uint64_t required, std::uint64_t cap)
        : Error("candidate space of " + std::to_string(required) +
                " interpretations exceeds the enumeration cap of " + std::to_string(cap)),
          required_(required),
          cap_(cap) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

/// Raised by degree() when the rule body holds but no head literal is in the
/// candidate set (the set was not an answer set to begin with).
class UndefinedDegreeError : public Error {
public:
    UndefinedDegreeError()
        : Error("degree undefined: body holds but no head literal is satisfied") {}
};

class NotABrewkaAnswerSetError : public Error {
public:
    NotABrewkaAnswerSetError()
        : Error("lift requires a Brewka answer set of the program") {}
};

class TooManyVariablesError : public Error {
public:
    TooManyVariablesError(std::size_t count, std::size_t cap)
        : Error("formula uses " + std::to_string(count) + " distinct literals, limit is " +
                std::to_string(cap)) {}
};

}  // namespace ordis
