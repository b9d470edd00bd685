#pragma once

#include <stdexcept>

namespace contspec {

// Caller handed us something outside a documented precondition.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A windowed composition ran out of columns; rebuild with a larger window.
struct window_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// invert() was asked to invert a non-injective map.
struct not_invertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cross-check the library guarantees by construction failed.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace contspec
