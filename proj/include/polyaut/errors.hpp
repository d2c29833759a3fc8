#ifndef POLYAUT_ERRORS_HPP
#define POLYAUT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyaut {

/// Operands live in rings (or maps) of different dimension.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The operation is not defined for this input (e.g. the leading form of 0).
class UndefinedInputError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed polynomial text. `position()` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownVariableError : public ParseError {
public:
    UnknownVariableError(const std::string& name, std::size_t position)
        : ParseError("unknown variable '" + name + "'", position), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// A structured document (e.g. map JSON) that does not follow its schema.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace polyaut

#endif // POLYAUT_ERRORS_HPP
