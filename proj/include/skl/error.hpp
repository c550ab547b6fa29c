// Error taxonomy shared by all modules. Everything user-visible funnels into
// one of these so the CLI can map failures onto its exit-code contract
// (0 success, 1 correctness failure, 2 usage).
#pragma once

#include <stdexcept>
#include <string>

namespace skl {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input / CLI misuse.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

// A byte stream failed structural validation while decoding.
class DecodeError : public Error {
 public:
  explicit DecodeError(const std::string& what) : Error(what) {}
};

// Parameter set rejected by a precondition (not by the condition report,
// which returns a structured result instead of throwing).
class ParamError : public Error {
 public:
  explicit ParamError(const std::string& what) : Error(what) {}
};

// Raised by coherent signing when some branch's constraint rejects the
// message; signing over such a register would disturb it.
class CoherenceViolation : public Error {
 public:
  explicit CoherenceViolation(const std::string& what) : Error(what) {}
};

}  // namespace skl
