#pragma once

#include <stdexcept>
#include <string>

namespace idem {

// Root of every exception thrown by this library. Two broad layers:
// InputError covers bad arguments a caller can provoke (malformed scalars,
// mismatched fields, division by zero, syntax errors); InternalError covers
// conditions that are supposed to be unreachable when the algebra behaves as
// proved, so seeing one is a bug either here or in the checked claim.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InputError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public InputError {
public:
    DivisionByZero() : InputError("division by zero") {}
};

class FieldMismatch : public InputError {
public:
    FieldMismatch() : InputError("operands belong to different fields") {}
};

class NotPrime : public InputError {
public:
    explicit NotPrime(const std::string& what) : InputError(what) {}
};

class BadScalar : public InputError {
public:
    explicit BadScalar(const std::string& what) : InputError(what) {}
};

class BothZero : public InputError {
public:
    BothZero() : InputError("gcd of two zero polynomials is undefined") {}
};

class WrongField : public InputError {
public:
    explicit WrongField(const std::string& what) : InputError(what) {}
};

class ProductMismatch : public InputError {
public:
    ProductMismatch() : InputError("claimed factors do not multiply back to the input") {}
};

class NotCoprime : public InputError {
public:
    NotCoprime() : InputError("moduli are not pairwise coprime") {}
};

class NonConstantScaleOfUnit : public InputError {
public:
    NonConstantScaleOfUnit()
        : InputError("non-constant coefficient on the unit component") {}
};

class CharTwo : public InputError {
public:
    CharTwo() : InputError("operation requires characteristic != 2") {}
};

class CtxMismatch : public InputError {
public:
    CtxMismatch() : InputError("elements live in different quotient contexts") {}
};

class NotUnital : public InputError {
public:
    NotUnital() : InputError("quotient has no unit: h(0) = 0") {}
};

class NotInvertible : public InputError {
public:
    explicit NotInvertible(const std::string& what) : InputError(what) {}
};

class BadModulus : public InputError {
public:
    explicit BadModulus(const std::string& what) : InputError(what) {}
};

class NotCommutative : public InputError {
public:
    NotCommutative() : InputError("generators do not commute") {}
};

class NotIdempotent : public InputError {
public:
    NotIdempotent() : InputError("matrix is not idempotent") {}
};

class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class UnknownSymbol : public InputError {
public:
    explicit UnknownSymbol(const std::string& name)
        : InputError("unknown symbol '" + name + "'") {}
};

// A dependence the theory guarantees was not found in the supplied data.
class NoDependence : public InternalError {
public:
    NoDependence() : InternalError("no linear dependence found in power sequence") {}
};

// Coordinate extraction hit a vector outside the predicted line.
class ExtractionFailure : public InternalError {
public:
    explicit ExtractionFailure(const std::string& what) : InternalError(what) {}
};

// Ideal power chain failed to vanish within the proven nilpotency bound.
class ClosureBoundExceeded : public InternalError {
public:
    explicit ClosureBoundExceeded(const std::string& what) : InternalError(what) {}
};

// Random sampling kept producing singular candidates past the retry bound.
class SingularSample : public InternalError {
public:
    SingularSample() : InternalError("could not sample an invertible matrix") {}
};

}  // namespace idem
