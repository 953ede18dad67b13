#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hodge {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A model, manifest or derived value violates an invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Two values that must share a dimension do not.
class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Malformed manifest text. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A name did not resolve against the catalog.
class LookupError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its stated domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Blow-up codimension out of range. r = 1 gets its own message because it is
// a common misuse: such a blow-up changes nothing at this level.
class CodimensionError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// An operation needed de Rham dimension data that the model does not carry.
class BettiRequiredError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// A factorization step cannot be applied to the current model.
class StepError : public PreconditionError {
public:
    StepError(const std::string& what, std::size_t step_index)
        : PreconditionError(what), step_index_(step_index) {}
    std::size_t step_index() const { return step_index_; }

private:
    std::size_t step_index_;
};

}  // namespace hodge
