#pragma once

#include <stdexcept>
#include <string>

namespace eip {

/// Base class for every error the toolkit raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad edge list, unknown constructor, out-of-range index.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error("input error: " + what) {}
};

/// A graph or search space exceeds a configured size bound.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error("capacity error: " + what) {}
};

/// An operation was called on an input that does not satisfy its hypothesis,
/// e.g. a product reduction on a factor without nested solutions.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error("precondition error: " + what) {}
};

}  // namespace eip
