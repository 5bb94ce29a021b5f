#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polykit {

// Bad arguments: wrong sizes, invalid indices, malformed input.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A partial result left the range of binary64. `index` identifies the
// offending step (product index, root index, ...) where known.
struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& what, std::size_t index = 0)
        : std::runtime_error(what), index(index) {}
    std::size_t index;
};

// Coincident parameters where distinctness is required.
struct singular_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace polykit
