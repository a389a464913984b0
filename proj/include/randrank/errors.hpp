#pragma once

#include <stdexcept>
#include <string>

namespace randrank {

// Bad user input: unknown rule name, invalid parameters, malformed options.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally valid request that exceeds what the implementation can do,
// e.g. exact enumeration beyond the supported n.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace randrank
