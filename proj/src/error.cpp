#include "tourney/error.hpp"

namespace tourney {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::ConflictingArc: return "ConflictingArc";
    case ErrorCode::IncompleteTournament: return "IncompleteTournament";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadFormat: return "BadFormat";
    case ErrorCode::NotATournament: return "NotATournament";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::WrongOrder: return "WrongOrder";
    }
    return "Unknown";
}

} // namespace tourney
