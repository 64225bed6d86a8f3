#pragma once

#include <stdexcept>
#include <string>

namespace stperm {

// Input failed a structural invariant (bad table, non-equivariant matrix, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size bound was exceeded.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Operation is deliberately not supported for these arguments.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace stperm
