#pragma once

#include <stdexcept>
#include <string>

namespace graphseg {

// Input/precondition failures. The CLI maps these to exit code 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace graphseg
