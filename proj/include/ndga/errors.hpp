#ifndef NDGA_ERRORS_HPP
#define NDGA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ndga {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shapes, spaces or degrees that do not fit together.
class StructuralError : public Error {
public:
    using Error::Error;
};

// A parameter outside the documented range.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// An input object violates the mathematical precondition of an operation
// (for instance d^M != 0 where an M-complex is required).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Malformed text or fixture input. `where` locates the offending token.
class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& what)
        : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

} // namespace ndga

#endif // NDGA_ERRORS_HPP
