#pragma once

#include <stdexcept>
#include <string>

namespace sqlab {

/// Malformed graph input: duplicate labels, unknown endpoints, self-loops,
/// or a multigraph handed to an operation that needs a simple graph.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A family or list builder was called outside its parameter domain.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An algorithm's structural precondition does not hold for its input.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A serialized document does not match the expected schema.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A solve ran out of its node or wall-clock budget before deciding.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computed verdict disagrees with the claim being certified.
class VerdictMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sqlab
