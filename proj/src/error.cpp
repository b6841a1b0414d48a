#include "cftree/error.hpp"

namespace cftree {

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::Ok: return "OK";
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::Schema: return "E_SCHEMA";
    case ErrorCode::Invalid: return "E_INVALID";
    case ErrorCode::UnknownState: return "E_UNKNOWN_STATE";
    case ErrorCode::UnknownLetter: return "E_UNKNOWN_LETTER";
    case ErrorCode::UnknownNode: return "E_UNKNOWN_NODE";
    case ErrorCode::DuplicateLetter: return "E_DUPLICATE_LETTER";
    case ErrorCode::InvolutionConflict: return "E_INVOLUTION_CONFLICT";
    case ErrorCode::NotDeterministic: return "E_NOT_DETERMINISTIC";
    case ErrorCode::NotReduced: return "E_NOT_REDUCED";
    case ErrorCode::NotInLanguage: return "E_NOT_IN_LANGUAGE";
    case ErrorCode::RadiusMismatch: return "E_RADIUS_MISMATCH";
    case ErrorCode::LimitExceeded: return "E_LIMIT_EXCEEDED";
    case ErrorCode::InvalidArgument: return "E_INVALID_ARGUMENT";
    case ErrorCode::Internal: return "E_INTERNAL";
    }
    return "E_UNKNOWN";
}

} // namespace cftree
