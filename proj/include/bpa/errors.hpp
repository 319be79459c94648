#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bpa {

/// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two computation paths that must agree did not. Always a bug in this
/// library, never a user error.
struct InternalInconsistency : Error {
  using Error::Error;
};

/// Filesystem read/write failed.
struct IoFailure : Error {
  using Error::Error;
};

/// A cache file failed validation (bad header, bad line, checksum mismatch).
struct MalformedCache : Error {
  using Error::Error;
};

/// A tail-bound certificate was requested with a ratio outside [0, 1).
struct InvalidRatio : Error {
  using Error::Error;
};

/// Brute-force enumeration refused to run above the safety limit.
struct LimitExceeded : Error {
  using Error::Error;
};

/// Text input (arrangement or b-file) failed to parse. `position` is the
/// byte offset of the offending character where that makes sense.
struct ParseError : Error {
  std::size_t position;
  explicit ParseError(const std::string& what, std::size_t pos = 0)
      : Error(what), position(pos) {}
};

/// A label occurred twice in one arrangement.
struct DuplicateLabel : ParseError {
  int label;
  DuplicateLabel(const std::string& what, std::size_t pos, int dup)
      : ParseError(what, pos), label(dup) {}
};

/// Network request could not be completed (includes "offline and no fixture").
struct NetworkFailure : Error {
  using Error::Error;
};

/// The remote resource does not exist (HTTP 404).
struct NotFound : Error {
  using Error::Error;
};

}  // namespace bpa
