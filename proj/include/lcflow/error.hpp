#pragma once
/**
 * @file   error.hpp
 * @brief  Exception type shared by every lcflow module.
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcflow
{
    enum class ErrorKind
    {
        InvalidArgument,
        AliasError,
        SingularPoint,
        DegenerateLength,
        NonPositiveArea,
        StabilityError,
        NotConverged,
        WindowTooNoisy,
        NotZeroLength,
        ModeNotExcluded,
        RejectionExhausted,
        ParseError,
        DuplicateMode,
        IoError,
    };

    [[nodiscard]] constexpr std::string_view to_string (ErrorKind kind) noexcept
    {
        switch (kind)
        {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::AliasError: return "AliasError";
        case ErrorKind::SingularPoint: return "SingularPoint";
        case ErrorKind::DegenerateLength: return "DegenerateLength";
        case ErrorKind::NonPositiveArea: return "NonPositiveArea";
        case ErrorKind::StabilityError: return "StabilityError";
        case ErrorKind::NotConverged: return "NotConverged";
        case ErrorKind::WindowTooNoisy: return "WindowTooNoisy";
        case ErrorKind::NotZeroLength: return "NotZeroLength";
        case ErrorKind::ModeNotExcluded: return "ModeNotExcluded";
        case ErrorKind::RejectionExhausted: return "RejectionExhausted";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DuplicateMode: return "DuplicateMode";
        case ErrorKind::IoError: return "IoError";
        }
        return "Unknown";
    }

    /// Every failure raised by the library carries a kind and the name of the operation that raised it.
    class Error : public std::runtime_error
    {
    public:
        Error (ErrorKind kind, std::string_view operation, const std::string &detail)
            : std::runtime_error (std::string (to_string (kind)) + " in " + std::string (operation) + ": " + detail),
              kind_ (kind)
        {
        }

        [[nodiscard]] ErrorKind kind () const noexcept { return kind_; }

    private:
        ErrorKind kind_;
    };
} // namespace lcflow
