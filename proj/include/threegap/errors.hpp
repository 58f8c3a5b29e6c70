#pragma once

#include <stdexcept>
#include <string>

namespace threegap {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Angle text that does not match the grammar.
struct ParseError : Error {
    using Error::Error;
};

/// Well-formed angle text with illegal values (q=0, c=0, d<0).
struct InvalidAngle : Error {
    using Error::Error;
};

/// Radicand above the squarefree-canonicalization limit (10^12).
struct RadicandTooLarge : Error {
    using Error::Error;
};

/// Two irrational operands over different squarefree radicands.
struct MixedRadicand : Error {
    using Error::Error;
};

/// Operation needs at least two points on the circle.
struct TooFewPoints : Error {
    using Error::Error;
};

/// Rational angle p/q with more than q points: orbit positions repeat.
struct PointCollision : Error {
    using Error::Error;
};

/// Zero points on the circle.
struct EmptyCircle : Error {
    using Error::Error;
};

}  // namespace threegap
