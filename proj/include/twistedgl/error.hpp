#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgl {

enum class ErrorKind {
    NotPrime,
    BadDegree,
    ZeroPolynomial,
    NotMonic,
    NotSquarefree,
    FieldMismatch,
    FieldTooLarge,
    SizeMismatch,
    OutOfRange,
    NonRationalResult,
    BudgetExceeded,
    SingularSystem,
    InconsistentSystem,
    NotStabilized,
    CharTwo,
    Unsupported,
    Parse,
    Io,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::BadDegree: return "BadDegree";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::NotSquarefree: return "NotSquarefree";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NonRationalResult: return "NonRationalResult";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::InconsistentSystem: return "InconsistentSystem";
        case ErrorKind::NotStabilized: return "NotStabilized";
        case ErrorKind::CharTwo: return "CharTwo";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace tgl
