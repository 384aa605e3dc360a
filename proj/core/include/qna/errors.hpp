#pragma once

#include <stdexcept>
#include <string>

namespace qna {

/// Malformed textual input (presentation files, polynomial expressions,
/// diagram strings). Carries a 1-based line/column when known.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line = 0, int col = 0)
        : std::runtime_error(std::move(msg)), line(line), col(col) {}
    int line;
    int col;
};

/// A presentation failed structural or axiom validation where a valid one
/// was required (e.g. while building a tower).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A resource cap (pair queue, nilpotency iterations, rewrite steps) was
/// exhausted. Converts potential non-termination into a diagnosable failure.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug or an unsaturated
/// intermediate ideal, never bad user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qna
