#pragma once

#include <stdexcept>
#include <string>

namespace gpd {

enum class ErrorKind {
  Syntax,        // malformed document text
  Reference,     // an identifier does not resolve
  Shape,         // dimension or size mismatch
  Usage,         // command misuse (missing block, bad flag)
  Construction,  // invalid building blocks (non-group table, non-action)
  Precondition,  // operation applied outside its domain
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace gpd
