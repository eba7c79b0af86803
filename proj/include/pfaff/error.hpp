#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfaff {

enum class ErrorCode {
  CornerOutOfRange,
  CoincidentCorners,
  NotSortable,
  EmptySpec,
  UnknownFamily,
  BadParams,
  StepNotApplicable,
  BadCornerIndex,
  HypothesisFails,
  NonTermination,
  OddSubset,
  IndexOutOfRange,
  TooManyGenerators,
  BudgetExceeded,
  NegativeHEntry,
  BadSpecFormat,
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CornerOutOfRange: return "CornerOutOfRange";
    case ErrorCode::CoincidentCorners: return "CoincidentCorners";
    case ErrorCode::NotSortable: return "NotSortable";
    case ErrorCode::EmptySpec: return "EmptySpec";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::StepNotApplicable: return "StepNotApplicable";
    case ErrorCode::BadCornerIndex: return "BadCornerIndex";
    case ErrorCode::HypothesisFails: return "HypothesisFails";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::OddSubset: return "OddSubset";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooManyGenerators: return "TooManyGenerators";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NegativeHEntry: return "NegativeHEntry";
    case ErrorCode::BadSpecFormat: return "BadSpecFormat";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so CLI diagnostics stay greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace pfaff
