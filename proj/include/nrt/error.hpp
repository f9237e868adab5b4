#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nrt {

enum class ErrorKind {
  WrongVariant,
  VariantMismatch,
  DegeneratePair,
  ZeroInput,
  ZeroAlpha,
  ZeroZeta,
  Overflow,
  Syntax,
  Usage,
};

const char* to_string(ErrorKind kind);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the expression parser; `position` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Syntax,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nrt
