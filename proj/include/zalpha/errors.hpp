#pragma once

#include <stdexcept>
#include <string>

namespace zalpha {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotMonic : Error {
    NotMonic() : Error("minimal polynomial must be monic with degree >= 1") {}
};

struct NotSquarefree : Error {
    NotSquarefree() : Error("minimal polynomial is not squarefree: gcd(f, f') != 1") {}
};

struct IntervalNotIsolating : Error {
    explicit IntervalNotIsolating(const std::string& what) : Error(what) {}
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("elements belong to fields of different degree") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// The subresultant PRS terminated with a nonconstant gcd.  Only possible
/// when the minimal polynomial is reducible and the element represents a
/// zero divisor of Z[x]/(f).
struct ZeroDivisor : Error {
    ZeroDivisor() : Error("element is a zero divisor (reducible minimal polynomial)") {}
};

struct InexactDivision : Error {
    InexactDivision() : Error("exact division left a nonzero remainder (broken caller invariant)") {}
};

struct NotSquare : Error {
    NotSquare() : Error("matrix is not square") {}
};

struct DependentBasis : Error {
    DependentBasis() : Error("basis vectors are linearly dependent") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace zalpha
