#pragma once

#include <stdexcept>
#include <string>

namespace slaumzi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A violated precondition or type invariant on caller-supplied values.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A numerical procedure could not produce a meaningful result.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed or unknown configuration input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace detail
}  // namespace slaumzi
