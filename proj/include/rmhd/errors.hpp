#pragma once

#include <stdexcept>
#include <string>

namespace rmhd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveInput : Error { using Error::Error; };
struct CausalityViolation : Error { using Error::Error; };
struct InvalidState : Error { using Error::Error; };
struct UnphysicalPoint : Error { using Error::Error; };
struct DegenerateField : Error { using Error::Error; };
struct SolverFailure : Error { using Error::Error; };
struct MultiValued : Error { using Error::Error; };
struct BracketNotFound : Error { using Error::Error; };
struct DegeneratePoint : Error { using Error::Error; };
struct StiffnessLimit : Error { using Error::Error; };

struct NotConnected : Error {
    double exit_y, exit_v;
    NotConnected(const std::string& msg, double y, double v)
        : Error(msg), exit_y(y), exit_v(v) {}
};

struct ParseError : Error {
    int line;
    ParseError(int ln, const std::string& msg)
        : Error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

struct ValidationError : Error {
    std::string field;
    ValidationError(const std::string& fld, const std::string& constraint)
        : Error(fld + ": " + constraint), field(fld) {}
};

} // namespace rmhd
