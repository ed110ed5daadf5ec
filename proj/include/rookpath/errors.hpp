#pragma once

#include <stdexcept>
#include <string>

namespace rookpath {

// Thrown when an exhaustive enumeration is asked to go beyond its desk-scale limit.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a text form does not parse.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by execute() when a letter cannot be applied.
struct MachineError : std::runtime_error {
    MachineError(std::size_t position, const std::string& reason)
        : std::runtime_error("letter at position " + std::to_string(position) + ": " + reason),
          position(position),
          reason(reason) {}

    std::size_t position;
    std::string reason;
};

}  // namespace rookpath
