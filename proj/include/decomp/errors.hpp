#ifndef DECOMP_ERRORS_HPP
#define DECOMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace decomp {

// Precondition violation: bad arguments or wrong graph class. CLI exit code 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file. Carries the 1-based line number. CLI exit code 1.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An exhaustive oracle refused to run because the instance exceeds its
// budget. Never a silent wrong answer. CLI exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace decomp

#endif
