#pragma once

#include <stdexcept>
#include <string>

namespace regimefactor {

// Bad inputs: malformed files, inconsistent shapes, out-of-range options.
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Estimation failed numerically: singular systems, non-convergence,
// degenerate regimes.  The CLI maps this to exit code 2.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace regimefactor
