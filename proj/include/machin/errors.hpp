#pragma once

#include <stdexcept>
#include <string>

namespace machin {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A relation term has arg >= 1, so 1/log10(b/a) is undefined or <= 0.
struct MeasureUndefined : Error { using Error::Error; };

// arctan addition hit x*y = 1 (the sum is an odd multiple of pi/2).
struct PoleError : Error { using Error::Error; };

// expand_two_over applied to a term whose argument numerator is not 2.
struct NotTwoOver : Error { using Error::Error; };

// The numeric side-channel could not pin the integer winding before
// reaching the configured maximum precision.
struct WindingUnresolved : Error { using Error::Error; };

// A cofactor remained after dividing out the prime set and 2.
struct NotSmooth : Error { using Error::Error; };

// Requested sieve bound exceeds the word-size budget (x < 2^64).
struct LimitTooLarge : Error { using Error::Error; };

// Malformed caller input (zero values, too few values, bad config...).
struct InvalidInput : Error { using Error::Error; };

// Alferov completion blew past the configured b_n bit cap.
struct DigitCapExceeded : Error { using Error::Error; };

// Store ingest gate: the relation failed exact certification.
struct NotCertified : Error { using Error::Error; };

}  // namespace machin
