#ifndef INDTREE_ERRORS_HPP
#define INDTREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace indtree {

// Input text could not be parsed. `line` is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class NotATreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an exponential-time routine is asked to exceed its vertex budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A graph has branching points but no truncation move applies anywhere.
// Cannot happen for trees; possible for graphs with cycles.
class StallError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace indtree

#endif
