#pragma once

#include <stdexcept>
#include <string>

namespace fuzzpart {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidAxis : public Error {
 public:
  using Error::Error;
};

class OutOfUniverse : public Error {
 public:
  using Error::Error;
};

class EmptyHistogram : public Error {
 public:
  using Error::Error;
};

/// The invariants a normalized membership function must satisfy.
/// Validation reports the first one violated.
enum class MFInvariant {
  Core,          // eta(0) = 1
  Support,       // eta(x) = 0 for |x| >= 1
  Symmetry,      // eta(-x) = eta(x)
  Monotonicity,  // non-increasing on [0, 1]
  Continuity,    // no step discontinuities
  Complement,    // eta(u) + eta(1-u) = 1 on [0, 1]
  Evaluation,    // non-finite value or evaluation failure
};

const char* to_string(MFInvariant inv);

/// A membership function failed validation. Carries the violated
/// invariant and the sample point that witnessed the failure.
class InvalidMF : public Error {
 public:
  InvalidMF(MFInvariant invariant, double witness, const std::string& detail);

  MFInvariant invariant() const { return invariant_; }
  double witness() const { return witness_; }

 private:
  MFInvariant invariant_;
  double witness_;
};

}  // namespace fuzzpart
