#ifndef COXSURF_ERRORS_HPP
#define COXSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coxsurf {

/// Division by zero in exact field arithmetic.
class DivisionByZero : public std::domain_error {
public:
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Two operands live in different polynomial rings.
class ContextMismatch : public std::invalid_argument {
public:
    explicit ContextMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A substitution map is missing a variable that occurs in the input.
class UnmappedVariable : public std::invalid_argument {
public:
    explicit UnmappedVariable(const std::string& what) : std::invalid_argument(what) {}
};

/// A Groebner computation exceeded its reduction-step budget.  This is a
/// timeout signal, never a wrong answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& stage, long budget)
        : std::runtime_error(stage + ": exceeded budget of " + std::to_string(budget) +
                             " reduction steps"),
          stage_(stage) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed or inconsistent catalog data.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coxsurf

#endif
