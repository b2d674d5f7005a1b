#ifndef NORLUND_ERRORS_HPP
#define NORLUND_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace norlund {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Series algebra.
class ZeroConstantTerm : public Error {
public:
    ZeroConstantTerm() : Error("series has a zero constant term") {}
};

class NonzeroConstantTerm : public Error {
public:
    NonzeroConstantTerm() : Error("series must have a zero constant term") {}
};

class ZeroLinearTerm : public Error {
public:
    ZeroLinearTerm() : Error("series has a zero linear term; not invertible") {}
};

class AmbiguousBranch : public Error {
public:
    AmbiguousBranch() : Error("both square roots are equidistant from the branch target") {}
};

class PrecisionFailure : public Error {
public:
    using Error::Error;
};

// Saddle geometry.
class PoleArgument : public Error {
public:
    PoleArgument() : Error("z must not be 0 or 1") {}
};

class DegenerateSaddle : public Error {
public:
    DegenerateSaddle() : Error("second derivative of the phase vanishes at the saddle") {}
};

class CorrectionDiverged : public Error {
public:
    using Error::Error;
};

// Asymptotic regimes.
class RegimeViolation : public Error {
public:
    using Error::Error;
};

/// z lies within the exclusion band around the segment [0,1].
class ExclusionBand : public RegimeViolation {
public:
    ExclusionBand(double distance, double eps)
        : RegimeViolation("z is within " + std::to_string(eps) + " of the segment [0,1] (distance " +
                          std::to_string(distance) + ")"),
          distance_(distance) {}

    double distance() const { return distance_; }

private:
    double distance_;
};

/// Malformed textual input; `position` is the 0-based offset of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace norlund

#endif  // NORLUND_ERRORS_HPP
