#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cftree {

// Stable error codes. The numeric values are part of the C API and must not
// be reordered.
enum class ErrorCode : int {
    Ok = 0,
    Parse = 1,              // malformed JSON or wrong field types
    Schema = 2,             // unknown / missing fields
    Invalid = 3,            // document failed validation
    UnknownState = 4,
    UnknownLetter = 5,
    UnknownNode = 6,
    DuplicateLetter = 7,
    InvolutionConflict = 8,
    NotDeterministic = 9,
    NotReduced = 10,
    NotInLanguage = 11,
    RadiusMismatch = 12,
    LimitExceeded = 13,
    InvalidArgument = 14,
    Internal = 15,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace cftree
