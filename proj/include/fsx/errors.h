#ifndef FSX_ERRORS_H_
#define FSX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fsx {

// Base class for every error raised by the library. Subclasses name the
// failed contract so callers (and the CLI exit-code mapping) can branch.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A custom sequence does not reach the requested bound.
class PrefixIncomplete : public Error {
 public:
  using Error::Error;
};

class Unrepresentable : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class RegularityRequired : public Error {
 public:
  using Error::Error;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class ProtocolViolation : public Error {
 public:
  using Error::Error;
};

class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

class UndefinedDensity : public Error {
 public:
  using Error::Error;
};

}  // namespace fsx

#endif  // FSX_ERRORS_H_
