#pragma once

#include <stdexcept>
#include <string>

namespace sset {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad indices, dangling names, wrong dimensions.
class InputError : public Error {
 public:
  using Error::Error;
};

// A question was asked beyond the dimension a presentation is known to.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search exceeded its configured candidate cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t explored)
      : Error(what), explored_(explored) {}
  std::size_t explored() const noexcept { return explored_; }

 private:
  std::size_t explored_;
};

// A horn that had to be filled has no filler.
class NoFillerError : public Error {
 public:
  using Error::Error;
};

}  // namespace sset
