#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qent {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidIndex : Error {
    using Error::Error;
};

struct InvalidPermutation : Error {
    using Error::Error;
};

struct InvalidUnitary : Error {
    using Error::Error;
};

struct WrongArity : Error {
    using Error::Error;
};

struct DegreeError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct ZeroState : Error {
    using Error::Error;
};

struct InvalidSpec : Error {
    using Error::Error;
};

struct UnknownCovariant : Error {
    using Error::Error;
};

struct RegistryError : Error {
    using Error::Error;
};

// Thrown by nilpotent_type on states outside the nullcone; carries the
// offending invariant values.
struct NotNilpotent : Error {
    std::complex<double> H, L, M, Dxy;
    NotNilpotent(std::complex<double> h, std::complex<double> l, std::complex<double> m,
                 std::complex<double> dxy)
        : Error("state does not belong to the nullcone"), H(h), L(l), M(m), Dxy(dxy) {}
};

}  // namespace qent
