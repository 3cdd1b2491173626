#pragma once

#include <stdexcept>
#include <string>

namespace normfib {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };
struct NotFinite : Error { using Error::Error; };
struct NotIntegral : Error { using Error::Error; };
struct WrongPlaceKind : Error { using Error::Error; };
struct UnsupportedWildSymbol : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct IndeterminateResult : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace normfib
