#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qchan {

enum class ErrorKind {
    NotHermitian,
    NotPSD,
    TraceNotOne,
    NoConvergence,
    ParamOutOfRange,
    DomainError,
    NonRealCorrelation,
    BadDimension,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported as an Error carrying the kind and,
// where one exists, the measured residual that tripped the check.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, double residual = 0.0);

    ErrorKind kind() const noexcept { return kind_; }
    double residual() const noexcept { return residual_; }

private:
    ErrorKind kind_;
    double residual_;
};

} // namespace qchan
