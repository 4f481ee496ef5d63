#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfsep {

/// Malformed input handed to a library operation (bad word, bad transition,
/// non-normalized grammar where normal form is required, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented precondition, e.g.
/// generalizing a witness that belongs to the language it must avoid.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The exhaustive generalizations ran out of their recursion budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::size_t budget)
        : std::runtime_error("generalization budget of " + std::to_string(budget) +
                             " recursive calls exceeded"),
          budget_(budget) {}

    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t budget_;
};

/// Syntax or semantic error in a grammar file, with 1-based position.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

} // namespace cfsep
