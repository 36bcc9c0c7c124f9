#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordtop {

// Base for all domain errors. `kind()` is a stable snake_case tag the CLI
// prints in its one-line diagnostics; exit code 1 is derived from catching
// this type.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct CycleDetected : Error {
  explicit CycleDetected(const std::string& m) : Error("cycle_detected", m) {}
};

struct BadIndex : Error {
  explicit BadIndex(const std::string& m) : Error("bad_index", m) {}
};

struct GroundTooLarge : Error {
  explicit GroundTooLarge(const std::string& m) : Error("ground_too_large", m) {}
};

struct GroundMismatch : Error {
  explicit GroundMismatch(const std::string& m) : Error("ground_mismatch", m) {}
};

struct EmptyCore : Error {
  explicit EmptyCore(const std::string& m) : Error("empty_core", m) {}
};

struct TooLargeForExhaustive : Error {
  explicit TooLargeForExhaustive(const std::string& m)
      : Error("too_large_for_exhaustive", m) {}
};

// Carries the byte offset at which parsing failed.
struct SyntaxError : Error {
  SyntaxError(std::size_t position, const std::string& m)
      : Error("syntax_error", m + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& m) : Error("arity_mismatch", m) {}
};

struct SplitOfZero : Error {
  explicit SplitOfZero(const std::string& m) : Error("split_of_zero", m) {}
};

struct ExhaustedRejection : Error {
  explicit ExhaustedRejection(const std::string& m)
      : Error("exhausted_rejection", m) {}
};

struct CarrierMismatch : Error {
  explicit CarrierMismatch(const std::string& m) : Error("carrier_mismatch", m) {}
};

struct InvalidCandidate : Error {
  explicit InvalidCandidate(const std::string& m) : Error("invalid_candidate", m) {}
};

// Thrown when a witness self-check fails. Valid candidates are guaranteed a
// witness, so this always signals a bug in the algebra kernel, never a
// property of the input.
struct VerificationFailed : Error {
  explicit VerificationFailed(const std::string& m)
      : Error("verification_failed", m) {}
};

struct NotAnInterval : Error {
  explicit NotAnInterval(const std::string& m) : Error("not_an_interval", m) {}
};

struct BadArgument : Error {
  explicit BadArgument(const std::string& m) : Error("bad_argument", m) {}
};

}  // namespace ordtop
