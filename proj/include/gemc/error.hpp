#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gemc {

/// Base of every error raised by the library.
class GemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that breaks one of the coloured-graph invariants.
class ValidationError : public GemError {
public:
    using GemError::GemError;
};

class OddOrderError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class FixedPointError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A matching that is not an involution on 0..order-1 (wrong size, out of
/// range entry, or m(m(v)) != v).
class InvolutionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DisconnectedError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class EmptyColourSetError : public GemError {
public:
    using GemError::GemError;
};

class IndexOutOfRangeError : public GemError {
public:
    using GemError::GemError;
};

class BipartitionClashError : public GemError {
public:
    using GemError::GemError;
};

class NonBipartiteError : public GemError {
public:
    using GemError::GemError;
};

class NotContractedError : public GemError {
public:
    using GemError::GemError;
};

class NotAManifoldGemError : public GemError {
public:
    using GemError::GemError;
};

class NotAFaceError : public GemError {
public:
    using GemError::GemError;
};

class ChoiceMismatchError : public GemError {
public:
    using GemError::GemError;
};

class MissingAnnotationError : public GemError {
public:
    using GemError::GemError;
};

class ParameterError : public GemError {
public:
    using GemError::GemError;
};

class CeilingExceededError : public GemError {
public:
    using GemError::GemError;
};

/// Something that can only happen on corrupted input that slipped past
/// validation or on an implementation bug. The CLI maps these to exit code 2.
class InternalInvariantError : public GemError {
public:
    using GemError::GemError;
};

class GenusMismatchError : public InternalInvariantError {
public:
    using InternalInvariantError::InternalInvariantError;
};

/// Parse failure carrying a 1-based source position.
class ParseError : public GemError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : GemError(position_prefix(line, column) + message), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string position_prefix(std::size_t line, std::size_t column) {
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
    }

    std::size_t line_;
    std::size_t column_;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Well-formed text describing an invalid graph.
class SemanticError : public ParseError {
public:
    enum class Cause { FixedPoint, NotInvolution, Disconnected, OddOrder };

    SemanticError(Cause cause, const std::string& message, std::size_t line, std::size_t column)
        : ParseError(message, line, column), cause_(cause) {}

    Cause cause() const noexcept { return cause_; }

private:
    Cause cause_;
};

}  // namespace gemc
