#pragma once

#include <stdexcept>
#include <string>

namespace pzf {

/// Base for runtime failures the CLI maps to exit code 1.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DisconnectedGraph : public Error
{
public:
    using Error::Error;
};

/// Exact solving was requested for a graph above the state-space cap.
class CapExceeded : public Error
{
public:
    CapExceeded(std::size_t n, std::size_t cap)
        : Error("graph has n=" + std::to_string(n) + " vertices, exceeding the exact-solver cap of "
                + std::to_string(cap)),
          n(n), cap(cap)
    {
    }

    std::size_t n;
    std::size_t cap;
};

enum class ParseErrorKind { malformed, out_of_range, duplicate_edge, self_loop };

class ParseError : public Error
{
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), kind(kind), line(line)
    {
    }

    ParseErrorKind kind;
    std::size_t line;
};

} // namespace pzf
