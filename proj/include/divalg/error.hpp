#pragma once

#include <stdexcept>
#include <string>

namespace divalg {

/// Raised when a closure or search exceeds its configured cap.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an algebra element turns out to be a zero divisor (or zero)
/// while an inverse was requested.
class ZeroDivisorError : public std::runtime_error {
public:
    explicit ZeroDivisorError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace divalg
