#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hjd {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input text; `offset` is the byte position of the offending token.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

// A formula could not be evaluated at the requested point (sqrt of a negative
// argument, division by zero, non-finite intermediate).
class EvalError : public Error {
  public:
    using Error::Error;
};

// A precondition on arguments or input data does not hold.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

// Numerical failure at runtime: exploding path, intensity overflow, hard
// non-convergence.
class NumericalError : public Error {
  public:
    using Error::Error;
};

// The least-squares design is rank deficient (or has too few usable rows).
class RankError : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace hjd
