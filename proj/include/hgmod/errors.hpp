#pragma once

#include <stdexcept>
#include <string>

namespace hgmod {

enum class ErrorKind {
    InvalidGroup,
    InvalidPermutation,
    InvalidSubgroup,
    BoundExceeded,
    NotAbelian,
    NotTame,
    QuotientNotCyclic,
    NotNormalized,
    InvalidAlgebra,
    NotInvertible,
    WildRamification,
    RankDeficient,
    ZeroElement,
    MultiplePrimes,
    MissingPrimeData,
    UnsupportedN,
    BadM,
    DimensionMismatch,
    NotFixed,
    TraceNotOne,
    NotAnOrder,
    SearchTooLarge,
    NotAlmostClassical,
    NotAmbiguous,
    WildPrime,
    NotDirectProduct,
    UnknownFixture,
    ParseError,
    SchemaError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace hgmod
