#pragma once

#include <stdexcept>
#include <string>

namespace trilink {

/// Domain failure with a located diagnostic. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or non-canonical input files.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace trilink
