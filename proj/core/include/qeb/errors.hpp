#pragma once

#include <stdexcept>
#include <string>

namespace qeb {

// Index errors use std::out_of_range and argument errors std::invalid_argument.
// The two types below cover the remaining failure classes.

/// A request would exceed a configured resource limit (e.g. the simulation cap).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An image has a shape the requested encoding cannot represent.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace qeb
