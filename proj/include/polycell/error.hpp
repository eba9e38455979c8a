#pragma once

#include <stdexcept>
#include <string>

namespace polycell {

enum class Errc {
  DuplicateId,
  DanglingEdge,
  UnknownVertex,
  UnknownEdge,
  UnknownFace,
  EmptyWalk,
  InvalidWalk,
  LengthMismatch,
  IndexOutOfRange,
  RangeError,
  NotInS0,
  NotSimple,
  NotOrdinary,
  OddFaces,
  NotIncident,
  InvalidSplit,
  BadParameter,
  LabelMapMissing,
  HypothesisViolated,
  TooLarge,
  Budget,
  ParseError,
  SemanticError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

// A validation finding: which invariant broke and where.
struct Violation {
  Errc code;
  std::string detail;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace polycell
