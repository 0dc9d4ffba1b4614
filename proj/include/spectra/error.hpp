#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed external input (graph6 text, corpus files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A mathematical hypothesis of an operation does not hold for the input:
// disconnected graph, isolated vertex, non-simple extreme eigenvalue, size cap.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure failed to meet its contract (non-convergence,
// non-finite data, internal inconsistency between pipelines).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace spectra
