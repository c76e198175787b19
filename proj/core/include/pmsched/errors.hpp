#pragma once

#include <stdexcept>
#include <string>

namespace pmsched {

/// Input text could not be parsed (malformed scenario file, bad rate literal).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input that violates a contract (range, dimension,
/// graph shape, ...).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact search was requested on an instance above its size limit.
class SizeLimitError : public std::runtime_error {
public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pmsched
