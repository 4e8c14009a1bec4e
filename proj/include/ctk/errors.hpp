#pragma once

#include <stdexcept>
#include <string>

namespace ctk {

// Input that fails structural validation (bad diagram, bad spec file, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input that is well-formed but violates an operation's hypothesis.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ctk
