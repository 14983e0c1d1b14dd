#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swarmpath {

// Bad argument to a pure operation (non-finite coordinate, negative margin, empty input).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation called on a state that violates its precondition (e.g. empty swarm).
class InvalidState : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Swarm initialization could not find a free position for a particle.
class PlacementError : public std::runtime_error {
public:
    PlacementError(std::size_t particle_index, const std::string& what)
        : std::runtime_error(what), particle_index_(particle_index) {}

    std::size_t particle_index() const noexcept { return particle_index_; }

private:
    std::size_t particle_index_;
};

// A scenario violates one of its invariants.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scenario text is not well-formed. Line and column are 1-based.
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : ValidationError(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace swarmpath
