#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zitterlab {

enum class ErrorCode {
  NonTimelike,
  NegativeRadicand,
  ZeroTimeComponent,
  OrderTooLow,
  SuperluminalVelocity,
  GaugeViolation,
  StepRejected,
  NoHelix,
  NotHelical,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonTimelike: return "NonTimelike";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::ZeroTimeComponent: return "ZeroTimeComponent";
    case ErrorCode::OrderTooLow: return "OrderTooLow";
    case ErrorCode::SuperluminalVelocity: return "SuperluminalVelocity";
    case ErrorCode::GaugeViolation: return "GaugeViolation";
    case ErrorCode::StepRejected: return "StepRejected";
    case ErrorCode::NoHelix: return "NoHelix";
    case ErrorCode::NotHelical: return "NotHelical";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zitterlab
