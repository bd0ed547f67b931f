#pragma once

#include <stdexcept>
#include <string>

namespace grcm {

// Machine-readable failure categories. The CLI reports these verbatim.
enum class Errc {
    MismatchedOrder,
    NotAUnit,
    NotDivisible,
    NotTight,
    BadParameters,
    CornerNotAdmissible,
    ConditionsViolated,
    OddFlipParity,
    GuardExceeded,
    InvalidInput,
    InvariantViolation,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::MismatchedOrder: return "MismatchedOrder";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotTight: return "NotTight";
    case Errc::BadParameters: return "BadParameters";
    case Errc::CornerNotAdmissible: return "CornerNotAdmissible";
    case Errc::ConditionsViolated: return "ConditionsViolated";
    case Errc::OddFlipParity: return "OddFlipParity";
    case Errc::GuardExceeded: return "GuardExceeded";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

// Raised by endo_from_corner when one of the divisibility side conditions
// fails; `index` is the 1-based position l of the failing partial sum B_{2l}.
class ConditionsViolated : public Error {
public:
    ConditionsViolated(int index, const std::string& what)
        : Error(Errc::ConditionsViolated, what), index_(index) {}

    int index() const noexcept { return index_; }

private:
    int index_;
};

} // namespace grcm
