#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nbif {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("zero polynomial") {}
};

class ConstantPolynomial : public Error {
public:
    ConstantPolynomial() : Error("constant polynomial") {}
};

class DegenerateInput : public Error {
public:
    using Error::Error;
};

class NotBadFace : public Error {
public:
    NotBadFace() : Error("face is not a bad face (d(P;f) != 0 or not one-dimensional)") {}
};

class BadFaceNotAllowed : public Error {
public:
    BadFaceNotAllowed() : Error("operation undefined on a bad face (d(P;f) = 0)") {}
};

class WrongFaceClass : public Error {
public:
    using Error::Error;
};

class InvalidCovector : public Error {
public:
    using Error::Error;
};

class NonPositiveCovector : public Error {
public:
    using Error::Error;
};

class MorseViolation : public Error {
public:
    MorseViolation() : Error("a bad face function is not Morse on R\\{0}") {}
};

class NonIsolatedSingularities : public Error {
public:
    NonIsolatedSingularities() : Error("f has a non-isolated real critical locus") {}
};

class NotDoubleRoot : public Error {
public:
    NotDoubleRoot() : Error("point is not a root of multiplicity exactly 2") {}
};

class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
        : Error(what), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

class NegativeExponent : public ParseError {
public:
    explicit NegativeExponent(std::size_t offset)
        : ParseError(offset, {"nat"}, "negative exponent at offset " + std::to_string(offset)) {}
};

}  // namespace nbif
