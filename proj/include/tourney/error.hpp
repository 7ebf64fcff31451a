#ifndef TOURNEY_ERROR_HPP
#define TOURNEY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace tourney {

enum class ErrorCode {
    ConflictingArc = 1,
    IncompleteTournament,
    BadVertex,
    LengthMismatch,
    BadFormat,
    NotATournament,
    BadParameter,
    BadPermutation,
    NotAnArc,
    WrongOrder,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above, which
/// the C API passes through unchanged as its status value.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace tourney

#endif
