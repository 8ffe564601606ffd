#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iaa {

enum class ErrorCode {
  MalformedInterval,
  InvertedBounds,
  NonFinite,
  IoError,
  MalformedRow,
  OutOfScale,
  EmptyDataset,
  MissingCell,
  ZeroSources,
  InvalidScale,
  ScaleMismatch,
  EmptyEvaluation,
  DivisionByZero,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInterval: return "MalformedInterval";
    case ErrorCode::InvertedBounds: return "InvertedBounds";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::OutOfScale: return "OutOfScale";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::MissingCell: return "MissingCell";
    case ErrorCode::ZeroSources: return "ZeroSources";
    case ErrorCode::InvalidScale: return "InvalidScale";
    case ErrorCode::ScaleMismatch: return "ScaleMismatch";
    case ErrorCode::EmptyEvaluation: return "EmptyEvaluation";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by ideal-ratio ranking when an alternative is dissimilar to both
/// ideals; `label` names the alternative whose score is undefined.
class UndefinedRatio : public Error {
 public:
  explicit UndefinedRatio(std::string label)
      : Error(ErrorCode::DivisionByZero,
              "ideal ratio undefined (division by zero) for '" + label + "'"),
        label_(std::move(label)) {}

  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

}  // namespace iaa
