#pragma once

#include <stdexcept>
#include <string>

namespace heisospec {

/// Mismatched vector/matrix/algebra dimensions.
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Parameters outside the constructible family (e.g. p + q = 0).
class InvalidParameterError : public std::invalid_argument {
public:
  explicit InvalidParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured cap (basis size, coefficient range) was exceeded.
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact integer arithmetic left the representable range.
class OverflowError : public std::overflow_error {
public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace heisospec
