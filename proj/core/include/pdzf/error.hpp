#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdzf {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid caller input: out-of-range ids, violated hypotheses, malformed
/// descriptors. The CLI maps these to exit status 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured size guard was exceeded. The CLI maps these to exit status 3.
class GuardExceeded : public Error {
public:
    GuardExceeded(const std::string& what, std::size_t limit, std::size_t actual)
        : Error(what + " (guard " + std::to_string(limit) + ", got " +
                std::to_string(actual) + ")"),
          limit_(limit), actual_(actual) {}

    std::size_t limit() const noexcept { return limit_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t limit_;
    std::size_t actual_;
};

/// An enumeration stopped because its output budget was exhausted.
class CapExceeded : public GuardExceeded {
public:
    CapExceeded(const std::string& what, std::size_t cap, std::size_t partial)
        : GuardExceeded(what, cap, partial) {}

    std::size_t partial_count() const noexcept { return actual(); }
};

enum class ParseErrorKind {
    MalformedHeader,
    MalformedEdge,
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
    EdgeCountMismatch,
};

const char* to_string(ParseErrorKind kind) noexcept;

/// Edge-list parse failure. `line()` is 1-based and refers to the physical
/// line in the input, comments included.
class ParseError : public InputError {
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
};

}  // namespace pdzf
