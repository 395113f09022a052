#pragma once

#include <stdexcept>
#include <string>

namespace betti {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad vertex labels, non-edges, unparsable files, bad moduli.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A size guard (vertex count, face count, search size) was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A structural precondition does not hold, e.g. the input graph is not
/// weakly chordal or the requested Betti number vanishes.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A step of the certificate construction that should always succeed did
/// not. Seeing this means a bug or a genuine gap in the construction.
class ProofObligationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace betti
