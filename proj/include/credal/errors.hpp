#pragma once

#include <stdexcept>
#include <string>

namespace credal {

/// Violated precondition on the in-memory model (mismatched spaces,
/// missing states, invalid probability vectors, unknown ids).
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size cap (vertex enumeration) was exceeded.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A flag combination the requested operation does not support.
class FlagError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text; `where` names the line or field.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

}  // namespace credal
