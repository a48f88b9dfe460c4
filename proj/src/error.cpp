#include "cplv/error.hpp"

namespace cplv {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::MissingVariable: return "MissingVariable";
        case Errc::DenominatorVanishes: return "DenominatorVanishes";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NoFiniteLimit: return "NoFiniteLimit";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::UnknownName: return "UnknownName";
        case Errc::ConstraintViolated: return "ConstraintViolated";
        case Errc::MissingParameter: return "MissingParameter";
        case Errc::UnknownVariety: return "UnknownVariety";
        case Errc::UnsupportedDimension: return "UnsupportedDimension";
        case Errc::BaseMismatch: return "BaseMismatch";
        case Errc::MalformedSubstitution: return "MalformedSubstitution";
        case Errc::ParseError: return "ParseError";
        case Errc::DataFileMissing: return "DataFileMissing";
        case Errc::BadConfig: return "BadConfig";
    }
    return "Error";
}

}  // namespace cplv
