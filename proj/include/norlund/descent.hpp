#ifndef NORLUND_DESCENT_HPP
#define NORLUND_DESCENT_HPP

// Steepest-descent and ascent paths of psi(s) = log(e^s - 1) - s z through a
// saddle.  The integrand is e^{-n psi}, so descent means Re psi increasing.
// Everything here runs in double precision: the paths are illustrative.

#include "norlund/saddle.hpp"

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace norlund {

using cdouble = std::complex<double>;

cdouble psi(cdouble s, cdouble z);
cdouble psi_prime(cdouble s, cdouble z);
cdouble psi_second(cdouble s, cdouble z);

struct PathPoint {
    double xi = 0.0;
    double eta = 0.0;
    double re_psi = 0.0;
    double im_psi = 0.0;  ///< unwrapped continuously from the saddle value
};

enum class BranchKind { DescentPlus, DescentMinus, AscentPlus, AscentMinus };
std::string to_string(BranchKind kind);

enum class Termination { MaxLength, NearPole, BlowUp };
std::string to_string(Termination t);

struct PathPolyline {
    std::vector<PathPoint> points;  ///< points.front() is the saddle
    SaddleContext saddle;
    BranchKind label = BranchKind::DescentPlus;
    Termination stop = Termination::MaxLength;
};

struct TraceOptions {
    double step = 1e-2;
    double max_len = 50.0;
    double path_tol = 1e-10;
};

/// Angle in (-pi/2, pi/2] of the line along which Re psi grows fastest at
/// the saddle, i.e. -arg(psi''(s_k))/2 mod pi.  Throws DegenerateSaddle.
double descent_direction(const SaddleContext& ctx);

/// Four branches (descent+, descent-, ascent+, ascent-) from the saddle
/// s_k of z.  "+" leaves the saddle along +e^{i theta} (theta from
/// descent_direction, or the perpendicular angle in (-pi/2, pi/2] for
/// ascent), "-" along the opposite ray.
std::vector<PathPolyline> trace_paths(const BigComplex& z, int saddle_index, const TraceOptions& opts = {});

/// CSV with header branch_label,xi,eta,re_psi,saddle; one row per point.
void write_paths_csv(std::ostream& out, const std::vector<PathPolyline>& paths);

}  // namespace norlund

#endif  // NORLUND_DESCENT_HPP
