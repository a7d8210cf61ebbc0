#pragma once

#include <stdexcept>
#include <string>

namespace latorb {

enum class ErrorCode {
    NotSymmetric,
    NotPositiveDefinite,
    NotEven,
    ElementNotInGroup,
    BudgetExceeded,
    CosetNotInDual,
    NotGramPreserving,
    InfiniteOrder,
    SizeCapExceeded,
    LemmaIdViolation,
    MixedRepresentations,
    NonQuarterExactRotation,
    VNotFixed,
    SupportViolation,
    LabelNotFixed,
    ParseError,
    ValidationError,
    BadArgument,
};

const char* error_code_name(ErrorCode c);

/// Domain exception carrying a machine-readable code plus a human message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::NotEven: return "NotEven";
        case ErrorCode::ElementNotInGroup: return "ElementNotInGroup";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::CosetNotInDual: return "CosetNotInDual";
        case ErrorCode::NotGramPreserving: return "NotGramPreserving";
        case ErrorCode::InfiniteOrder: return "InfiniteOrder";
        case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorCode::LemmaIdViolation: return "LemmaIdViolation";
        case ErrorCode::MixedRepresentations: return "MixedRepresentations";
        case ErrorCode::NonQuarterExactRotation: return "NonQuarterExactRotation";
        case ErrorCode::VNotFixed: return "VNotFixed";
        case ErrorCode::SupportViolation: return "SupportViolation";
        case ErrorCode::LabelNotFixed: return "LabelNotFixed";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

}  // namespace latorb
