#pragma once

#include <stdexcept>
#include <string>

namespace lyl {

// Bad user input: malformed instances, unknown ids, violated preconditions.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap (enumeration size, DP state count, ...) was exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical routine failed to reach its target accuracy.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lyl
