#include "hgmod/errors.hpp"

namespace hgmod {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::InvalidSubgroup: return "InvalidSubgroup";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotTame: return "NotTame";
    case ErrorKind::QuotientNotCyclic: return "QuotientNotCyclic";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::WildRamification: return "WildRamification";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::MultiplePrimes: return "MultiplePrimes";
    case ErrorKind::MissingPrimeData: return "MissingPrimeData";
    case ErrorKind::UnsupportedN: return "UnsupportedN";
    case ErrorKind::BadM: return "BadM";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotFixed: return "NotFixed";
    case ErrorKind::TraceNotOne: return "TraceNotOne";
    case ErrorKind::NotAnOrder: return "NotAnOrder";
    case ErrorKind::SearchTooLarge: return "SearchTooLarge";
    case ErrorKind::NotAlmostClassical: return "NotAlmostClassical";
    case ErrorKind::NotAmbiguous: return "NotAmbiguous";
    case ErrorKind::WildPrime: return "WildPrime";
    case ErrorKind::NotDirectProduct: return "NotDirectProduct";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

} // namespace hgmod
