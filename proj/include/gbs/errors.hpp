#pragma once

#include <stdexcept>
#include <string>

namespace gbs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct EmptyCode : Error { using Error::Error; };
struct EmptyMatrix : Error { using Error::Error; };
struct NoLogicalQubits : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct TargetTooSmall : Error { using Error::Error; };
struct NoSlots : Error { using Error::Error; };
struct SamplingFailed : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct MissingLayout : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

}  // namespace gbs
