#pragma once

#include <stdexcept>
#include <string>

namespace cdfan {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input errors: bad files, bad parameters, invalid posets.
class UnsupportedSizeError : public Error { using Error::Error; };
class InvalidPosetError : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };
class SchemaError : public Error { using Error::Error; };
class LengthMismatchError : public Error { using Error::Error; };
class IoError : public Error { using Error::Error; };

/// The poset admits no consistent incidence orientation.
class NoOrientationError : public Error { using Error::Error; };

/// The flag data is not in the span of the cd-word images.
class NotInCdSpanError : public Error {
public:
  NotInCdSpanError(const std::string& what, std::string residual)
      : Error(what), residual_(std::move(residual)) {}
  const std::string& residual() const { return residual_; }
private:
  std::string residual_;
};

/// Componentwise data does not match a free module on the verification box.
class NotFreeError : public Error { using Error::Error; };

class InvalidSheafError : public Error { using Error::Error; };
class NoCandidateError : public Error { using Error::Error; };
class PreconditionViolatedError : public Error { using Error::Error; };

/// A sampled candidate violates an assumption of the main construction.
/// Retryable: the caller is expected to resample.
class AssumptionFailedError : public Error {
public:
  enum class Kind { Injectivity, Annihilation };
  AssumptionFailedError(Kind kind, const std::string& what)
      : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }
private:
  Kind kind_;
};

/// All retries at some recursion node were exhausted.
class ExhaustedRetriesError : public Error {
public:
  ExhaustedRetriesError(std::string prefix, const std::string& what)
      : Error(what), prefix_(std::move(prefix)) {}
  const std::string& prefix() const { return prefix_; }
private:
  std::string prefix_;
};

/// Events that contradict a proved statement: always a bug, never retried.
class InternalInvariantError : public Error { using Error::Error; };
class DegeneratePairingError : public InternalInvariantError {
  using InternalInvariantError::InternalInvariantError;
};
class DivisibilityViolationError : public InternalInvariantError {
  using InternalInvariantError::InternalInvariantError;
};

} // namespace cdfan
