#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geodetic {

enum class ErrorCode : std::uint8_t {
  kSelfLoop,
  kVertexOutOfRange,
  kDisconnected,
  kInvalidSize,
  kDomainMismatch,
  kNoNodes,
  kPendantVertex,
  kMultiEdgeCollapse,
  kLoopSegment,
  kTooLarge,
  kNotMooreBase,
  kBudgetExceeded,
  kNotGeodetic,
  kParse,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it onto exit statuses and JSON error documents.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a search runs out of time or node budget. Carries how far the
// search got so a caller can report partial progress or resume from the
// checkpoint file.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& message, std::size_t completed_units,
                      std::size_t total_units, std::string checkpoint_path)
      : Error(ErrorCode::kBudgetExceeded, message),
        completed_units_(completed_units),
        total_units_(total_units),
        checkpoint_path_(std::move(checkpoint_path)) {}

  std::size_t completed_units() const noexcept { return completed_units_; }
  std::size_t total_units() const noexcept { return total_units_; }
  const std::string& checkpoint_path() const noexcept {
    return checkpoint_path_;
  }

 private:
  std::size_t completed_units_;
  std::size_t total_units_;
  std::string checkpoint_path_;
};

}  // namespace geodetic
