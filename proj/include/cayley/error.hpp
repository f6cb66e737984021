#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

enum class ErrorKind {
  kInvalidPermutation,
  kDegreeMismatch,
  kEmptyGenerators,
  kUnknownGroup,
  kParseError,
  kOrderMismatch,
  kTransitivityMismatch,
  kNotASubgroup,
  kNotAPartition,
  kOutOfRange,
  kPrecondition,
  kCapExceeded,
  kNotRegular,
  kIoError,
  kVerification,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cayley
