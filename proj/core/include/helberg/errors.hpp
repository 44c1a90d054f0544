#pragma once

#include <stdexcept>
#include <string>

namespace helberg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments outside the documented domain.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A word and a weight table (or codebook length) do not line up.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// An internal bound that must hold for any input within the corruption
/// model was violated; the input cannot have come from the claimed codebook
/// with the allowed number of indels.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Decoding could not complete. Carries the serialized partial trace so the
/// decision path that led to the failure can be inspected.
class DecodeFailure : public Error {
 public:
  explicit DecodeFailure(const std::string& what, std::string trace_text = {})
      : Error(what), trace_(std::move(trace_text)) {}

  const std::string& trace_text() const noexcept { return trace_; }

 private:
  std::string trace_;
};

}  // namespace helberg
