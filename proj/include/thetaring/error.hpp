#pragma once

#include <stdexcept>
#include <string>

namespace thetaring {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad vertex index, duplicate edge, self loop, bad file.
class GraphError : public Error {
public:
    using Error::Error;
};

/// Text input that does not follow one of the line formats.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string & message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
public:
    enum class Reason {
        not_two_connected,
        vertex_in_subgraph,
        subgraph_too_small,
        subgraph_not_connected,
        not_chordal,
        not_connected,
        not_complete,
        not_a_cycle,
        not_a_clique,
        not_an_oriented_path,
        invalid_parameters,
        too_large,
    };

    PreconditionError(Reason reason, const std::string & message) : Error(message), reason_(reason) {}

    [[nodiscard]] Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

/// Toric computations that need finite fibers refuse orientations with a directed cycle.
class UnsupportedOrientation : public Error {
public:
    UnsupportedOrientation() : Error("unsupported_orientation: orientation contains an oriented cycle") {}
};

/// A fiber grew past its safety cap.
class FiberCapExceeded : public Error {
public:
    explicit FiberCapExceeded(std::size_t cap)
        : Error("fiber enumeration exceeded cap of " + std::to_string(cap) + " elements")
    {
    }
};

} // namespace thetaring
