#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dicke {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StateViolation { Hermiticity, Trace, Positivity };

const char* to_string(StateViolation v);

/// A matrix failed one or more density-matrix invariants.
class InvalidState : public Error {
 public:
  struct Item {
    StateViolation kind;
    double magnitude;
  };

  explicit InvalidState(std::vector<Item> items);

  const std::vector<Item>& violations() const { return items_; }
  bool has(StateViolation kind) const;

 private:
  std::vector<Item> items_;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotPSD : public Error {
 public:
  using Error::Error;
};

class NotPure : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

class InvalidWeights : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The integrator produced a state outside the positivity band.
class StepTooLarge : public Error {
 public:
  using Error::Error;
};

/// t_gamma / c_max are undefined when gamma >= gamma0.
class DegenerateRates : public Error {
 public:
  using Error::Error;
};

class UnsupportedClosedForm : public Error {
 public:
  using Error::Error;
};

/// A numerical routine produced output that contradicts its own guarantees.
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dicke
