#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bingbound {

enum class ErrorKind {
  OddSize,
  NotSquare,
  NotUnimodularIntersection,
  NotCoprime,
  UnknownAtom,
  NoMatrixForAtom,
  TauUnknownForAtom,
  DomainError,
  NotACherry,
  WouldTrivialize,
  NotDepthOneLeaf,
  BadLocator,
  TraceMismatch,
  Inconsistent,
  Parse,
  Io,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OddSize: return "OddSize";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotUnimodularIntersection: return "NotUnimodularIntersection";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::UnknownAtom: return "UnknownAtom";
    case ErrorKind::NoMatrixForAtom: return "NoMatrixForAtom";
    case ErrorKind::TauUnknownForAtom: return "TauUnknownForAtom";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotACherry: return "NotACherry";
    case ErrorKind::WouldTrivialize: return "WouldTrivialize";
    case ErrorKind::NotDepthOneLeaf: return "NotDepthOneLeaf";
    case ErrorKind::BadLocator: return "BadLocator";
    case ErrorKind::TraceMismatch: return "TraceMismatch";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Io: return "IoError";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the 0-based character offset in the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bingbound
