#pragma once

#include <stdexcept>
#include <string>

namespace longcycle {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Capacity,
  NoPath,
  Precondition,
  Invariant,
  Refused,
};

// Every failure raised by the library carries one of the codes above so the
// C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::Parse,
              what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Raised when a result the mathematics guarantees does not materialise.
// Seeing one means the library has a bug, not that the input was bad.
class InvariantFailure : public Error {
 public:
  explicit InvariantFailure(const std::string& what)
      : Error(ErrorCode::Invariant, "invariant failure: " + what) {}
};

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

}  // namespace longcycle
