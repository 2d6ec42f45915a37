#pragma once

#include <stdexcept>
#include <string>

namespace matro {

// Machine-readable error codes.  Every failure thrown by this library
// carries one of these so callers (in particular the CLI) can map it to a
// stable name and an exit status without parsing the message text.
enum class Errc {
  // input parsing
  ParseError,
  RationalParseError,
  // construction / validation
  ValidationError,
  EmptyBases,
  WrongCardinality,
  ExchangeAxiomViolated,
  NotAnAntichain,
  DisconnectedGraph,
  GraphLoopEdge,
  ZeroMatrix,
  BadParameters,
  GroundSetTooLarge,
  // operation preconditions
  NotAFlat,
  NotNested,
  HasLoops,
  NotConnected,
  NotSubsetOfLattice,
  NotABasis,
  NotAFacet,
  InvalidBuildingSet,
  TopMissing,
  LengthMismatch,
};

// Broad failure categories; the CLI maps them to exit codes.
enum class ErrorKind {
  Parse,         // exit 3: unreadable or malformed input
  Validation,    // exit 2: well-formed input that fails validation
  Precondition,  // exit 4: valid object fed to an operation it cannot take
};

constexpr const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::RationalParseError: return "RationalParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::EmptyBases: return "EmptyBases";
    case Errc::WrongCardinality: return "WrongCardinality";
    case Errc::ExchangeAxiomViolated: return "ExchangeAxiomViolated";
    case Errc::NotAnAntichain: return "NotAnAntichain";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::GraphLoopEdge: return "GraphLoopEdge";
    case Errc::ZeroMatrix: return "ZeroMatrix";
    case Errc::BadParameters: return "BadParameters";
    case Errc::GroundSetTooLarge: return "GroundSetTooLarge";
    case Errc::NotAFlat: return "NotAFlat";
    case Errc::NotNested: return "NotNested";
    case Errc::HasLoops: return "HasLoops";
    case Errc::NotConnected: return "NotConnected";
    case Errc::NotSubsetOfLattice: return "NotSubsetOfLattice";
    case Errc::NotABasis: return "NotABasis";
    case Errc::NotAFacet: return "NotAFacet";
    case Errc::InvalidBuildingSet: return "InvalidBuildingSet";
    case Errc::TopMissing: return "TopMissing";
    case Errc::LengthMismatch: return "LengthMismatch";
  }
  return "UnknownError";
}

constexpr ErrorKind errc_kind(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::RationalParseError:
      return ErrorKind::Parse;
    case Errc::ValidationError:
    case Errc::EmptyBases:
    case Errc::WrongCardinality:
    case Errc::ExchangeAxiomViolated:
    case Errc::NotAnAntichain:
    case Errc::DisconnectedGraph:
    case Errc::GraphLoopEdge:
    case Errc::ZeroMatrix:
    case Errc::BadParameters:
    case Errc::GroundSetTooLarge:
      return ErrorKind::Validation;
    default:
      return ErrorKind::Precondition;
  }
}

class MatroidError : public std::runtime_error {
 public:
  MatroidError(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  ErrorKind kind() const { return errc_kind(code_); }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw MatroidError(code, message);
}

}  // namespace matro
