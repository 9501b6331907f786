#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace delaycode {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (bad prefix length, mismatched k, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A size guard was exceeded; set DELAYCODE_GUARD_OVERRIDE=1 to lift it.
struct ResourceError : Error {
  using Error::Error;
};

struct NotRegularError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

/// The code breaks k-bit delay decodability: two symbols matched.
struct InvalidCodeError : Error {
  using Error::Error;
};

struct InvalidRctError : Error {
  using Error::Error;
};

struct FlushError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Codeword stream that cannot have come from the encoder. `offset` is the
/// bit position where decoding stopped.
struct CorruptInputError : Error {
  CorruptInputError(const std::string& what, std::size_t offset)
      : Error(what + " (at bit offset " + std::to_string(offset) + ")"), offset(offset) {}
  std::size_t offset;
};

/// True when DELAYCODE_GUARD_OVERRIDE=1 is set in the environment.
bool guard_override();

}  // namespace delaycode
