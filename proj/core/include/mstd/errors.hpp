#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mstd {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions, or an operation needs a
/// specific dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

class EmptySetError : public Error {
public:
    using Error::Error;
};

/// A precondition on a scalar argument failed.
class ArgumentError : public Error {
public:
    using Error::Error;
};

class SingularMapError : public Error {
public:
    using Error::Error;
};

class GcdError : public Error {
public:
    using Error::Error;
};

/// Input does not satisfy the hypotheses of the growth / dominance analysis.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// kA did not decompose as prefix set, filled run and suffix set.
class StructureError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DuplicateError : public ParseError {
public:
    using ParseError::ParseError;
};

} // namespace mstd
