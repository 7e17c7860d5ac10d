#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace q2 {

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotConnected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a property's precondition leaves nothing to quantify over
// (e.g. p(2,s) on a graph with no path of length 2).
struct PropertyVacuous : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace q2
