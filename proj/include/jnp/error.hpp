#ifndef JNP_ERROR_HPP
#define JNP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace jnp {

/// Base class for all recoverable errors raised by the library.
/// The CLI maps these to exit code 2 (usage / input error).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};

struct FieldMismatch : Error {
    using Error::Error;
};

struct DimMismatch : Error {
    using Error::Error;
};

struct MissingProduct : Error {
    using Error::Error;
};

struct OrientationMismatch : Error {
    using Error::Error;
};

struct CharacteristicError : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

struct NonInvertibleElement : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

/// A documented precondition of an operation does not hold for the inputs.
struct ConstraintViolation : Error {
    using Error::Error;
};

/// A construction whose output is guaranteed by a theorem failed its own
/// post-check.  Indicates a bug, never a user error.
struct InternalCheckFailure : std::logic_error {
    explicit InternalCheckFailure(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace jnp

#endif
