#pragma once

#include <stdexcept>
#include <string>

namespace hyperspec {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed `.hg` input or invalid hypergraph data.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Mismatched orders, dimensions or uniformities between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A dense tensor would exceed the configured entry cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The requested operation is outside the supported regime
/// (odd uniformity, non-odd-bipartite Laplacian radius, reducible input, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperspec
