#pragma once

#include <stdexcept>
#include <string>

namespace rsat {

// Malformed graph text. The message always names the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

// A size limit or enumeration budget would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Construction or query parameters outside the documented domain.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A persisted witness does not match its record.
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No construction in the implemented range produces the requested parameters.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace rsat
