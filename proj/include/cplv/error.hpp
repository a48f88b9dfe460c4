#pragma once
#include <stdexcept>
#include <string>

namespace cplv {

enum class Errc {
    MissingVariable,
    DenominatorVanishes,
    DivisionByZero,
    NoFiniteLimit,
    SingularMatrix,
    UnknownName,
    ConstraintViolated,
    MissingParameter,
    UnknownVariety,
    UnsupportedDimension,
    BaseMismatch,
    MalformedSubstitution,
    ParseError,
    DataFileMissing,
    BadConfig,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace cplv
