#pragma once

#include <stdexcept>

namespace dtuple {

/// Violated precondition or malformed input. The CLI maps this to exit code 1.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A bound formula whose own proviso fails on the given data.
struct inapplicable_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Cache or stream failure.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dtuple
