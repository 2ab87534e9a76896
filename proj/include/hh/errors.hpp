#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hh {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad argument values: dimension mismatches, invalid exponents, malformed
// configuration, and similar caller mistakes.
struct InputError : Error {
  using Error::Error;
};

// A stated precondition of an operation does not hold (e.g. a kernel fails
// its homogeneity check before a constant is computed).
struct PreconditionError : Error {
  using Error::Error;
};

// A configuration document is unusable: unparseable JSON, an unknown key,
// a missing required field, or a value of the wrong type or range.
struct ConfigError : Error {
  using Error::Error;
};

// Expression text could not be parsed. `offset` is the byte position of the
// offending token; `expected` lists token classes that would have been legal.
struct ParseError : Error {
  std::size_t offset;
  std::vector<std::string> expected;
  ParseError(const std::string& msg, std::size_t off, std::vector<std::string> exp)
      : Error(msg), offset(off), expected(std::move(exp)) {}
};

// An integrand or expression produced NaN at `where` (for 2-D integrands the
// offending inner coordinate).
struct EvalError : Error {
  double where;
  EvalError(const std::string& msg, double w) : Error(msg), where(w) {}
};

}  // namespace hh
