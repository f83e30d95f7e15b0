#pragma once

#include <stdexcept>
#include <string>

namespace flagcurv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedAlgebra : Error { using Error::Error; };
struct NotARoot : Error { using Error::Error; };
struct DegenerateString : Error { using Error::Error; };
struct EmptyTangentSpace : Error { using Error::Error; };
struct UnknownSpace : Error { using Error::Error; };
struct InvalidMetric : Error { using Error::Error; };
struct InvalidACS : Error { using Error::Error; };
struct SpaceMismatch : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };
struct InvalidTolerance : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };

}  // namespace flagcurv
