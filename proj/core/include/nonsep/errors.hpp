#pragma once

#include <stdexcept>
#include <string>

namespace nonsep {

// Input violates a documented precondition (bad vertex set, too few vertices,
// connectivity or independence bound not met, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is outside the range where a construction is guaranteed to exist.
class NotGuaranteedError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Exhaustive routine refused an instance above its size bound.
class BoundExceededError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// A construction produced something that failed its own verification, or a
// structural claim that must hold did not. Always a bug.
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed textual input. `position` is a human-readable location.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string position)
        : std::runtime_error(what + " at " + position), position_(std::move(position)) {}
    const std::string& position() const noexcept { return position_; }

private:
    std::string position_;
};

}  // namespace nonsep
