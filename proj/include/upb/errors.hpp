#ifndef UPB_ERRORS_HPP
#define UPB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace upb {

// Base class for every error the library raises on purpose.  Each subclass
// corresponds to one documented failure mode so callers (and the CLI) can
// map them to stable exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// exact-linalg
struct NonHermitianInput : Error {
    explicit NonHermitianInput(const std::string& msg) : Error(msg) {}
};
struct WrongShape : Error {
    explicit WrongShape(const std::string& msg) : Error(msg) {}
};

// uom model
struct ConstraintUnsatisfiable : Error {
    explicit ConstraintUnsatisfiable(const std::string& msg) : Error(msg) {}
};
struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& msg) : Error(msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// search engine
struct NotOrthogonal : Error {
    explicit NotOrthogonal(const std::string& msg) : Error(msg) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};
struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& msg) : Error(msg) {}
};
struct SetTooLarge : Error {
    explicit SetTooLarge(const std::string& msg) : Error(msg) {}
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// combinatorics
struct BadArity : Error {
    explicit BadArity(const std::string& msg) : Error(msg) {}
};

} // namespace upb

#endif
