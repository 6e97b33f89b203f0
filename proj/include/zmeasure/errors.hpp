#pragma once

#include <stdexcept>
#include <string>

namespace zmeasure {

// Every failure the library reports derives from Error so callers (the CLI in
// particular) can map families of errors onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain (x <= 0 for W, bad sign pair, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// (z, z') violates both admissibility conditions, or xi is outside (0, 1).
class AdmissibilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Lower hypergeometric parameter hits a nonpositive integer before the series
// terminates, or an argument sits on a pole of a meromorphic function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Result cannot be trusted at double precision (cancellation, route mismatch,
// non-negligible imaginary part).
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Enumeration or sampling caps exceeded, or an oracle tail budget is violated.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace zmeasure
