#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfbasis {

enum class ErrorKind {
  InvalidGraph,
  InvalidEmbedding,
  DisconnectedGraph,
  EdgeInTree,
  UniverseMismatch,
  InvalidParity,
  WrongChi,
  NotTheta,
  SeparatingCycle,
  RankDeficit,
  PreconditionFailed,
  TheoremViolation,
  TooLarge,
  NotFound,
  DomainError,
  NonTermination,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::EdgeInTree: return "EdgeInTree";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::InvalidParity: return "InvalidParity";
    case ErrorKind::WrongChi: return "WrongChi";
    case ErrorKind::NotTheta: return "NotTheta";
    case ErrorKind::SeparatingCycle: return "SeparatingCycle";
    case ErrorKind::RankDeficit: return "RankDeficit";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

// Every failure raised by the library carries a kind so callers (and the
// CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace surfbasis
