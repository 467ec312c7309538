#pragma once
#include <stdexcept>
#include <string>

namespace skewcliff {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error { using Error::Error; };
struct MixedVariant : Error { using Error::Error; };
struct PoleAtValue : Error { using Error::Error; };
struct BadPrime : Error { using Error::Error; };
struct DenominatorVanishes : Error { using Error::Error; };

struct ExpressionParseError : Error { using Error::Error; };
struct Inhomogeneous : Error { using Error::Error; };

struct TruncationTooLow : Error { using Error::Error; };
struct DegreeExceedsTruncation : Error { using Error::Error; };
struct NotComplete : Error { using Error::Error; };
struct NotQuadratic : Error { using Error::Error; };

struct MuAxiomViolation : Error {
    int i = 0, j = 0;
    MuAxiomViolation(const std::string& msg, int i_, int j_) : Error(msg), i(i_), j(j_) {}
};
struct NotMuSymmetric : Error {
    int i = 0, j = 0;
    NotMuSymmetric(const std::string& msg, int i_, int j_) : Error(msg), i(i_), j(j_) {}
};
struct MatricesDependent : Error { using Error::Error; };
struct NotNormalizing : Error {
    int index = 0;
    NotNormalizing(const std::string& msg, int index_) : Error(msg), index(index_) {}
};
struct SchemaError : Error { using Error::Error; };

} // namespace skewcliff
