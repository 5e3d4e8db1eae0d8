#pragma once

#include <stdexcept>
#include <string>

namespace wls {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on universes of different sizes, or families disagree on indexing.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// A value, table, or file could not be interpreted.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Tables supplied for a finite lattice violate the residuated-lattice axioms.
class InvalidLattice : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition (not a preorder, bad kind, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The oracle found a state that contradicts the underlying theory.
class OracleInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace wls
