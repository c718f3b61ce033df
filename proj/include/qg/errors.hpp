#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched grids, lattices or malformed containers.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation (t < 0, p < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exponential weight would exceed the configured cap.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration. Carries every violation found, not just the first.
class ConfigError : public Error {
 public:
  explicit ConfigError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Syntax error in a configuration document.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Time step rejected by the CFL guard.
class CflError : public Error {
 public:
  using Error::Error;
};

/// Sup norm grew beyond the blow-up guard.
class BlowUpError : public Error {
 public:
  using Error::Error;
};

/// Fixed-point iteration stopped contracting.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Binary file with wrong magic, version or size.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace qg
