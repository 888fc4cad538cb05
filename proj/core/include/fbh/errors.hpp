#pragma once

#include <stdexcept>
#include <string>

namespace fbh {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector lengths disagree with a DomainSig, or an argument is outside the
/// documented range of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotInterior : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotOnBoundary : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Y = 0 passed to the Minkowski functional; the caller owns the K = 0 case.
class DegenerateDirection : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// v < 4b^2: the alpha equation has no solution.
class NoRootBranch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Geodesic parameters that hit the vanishing-denominator guard.
class InvalidParameters : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A solver ran out of iterations or lost its bracket.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

/// A map handed to the Schwarz auditor violates its hypotheses.
class MapHypothesisViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace fbh
