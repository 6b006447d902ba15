#pragma once

#include <stdexcept>

namespace mdlab {

// Exit-code contract for the CLI: parameter errors -> 2, resource errors -> 3.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Interval arithmetic could not pin down a continued-fraction coefficient
// within the configured precision cap.
struct certification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mdlab
