#include "norlund/descent.hpp"

#include "norlund/errors.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace norlund {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kNewtonIterations = 30;
constexpr int kMaxFailures = 3;
constexpr double kBlowUp = 1e8;

/// Shifts `value` by a multiple of 2 pi so that it lies within pi of `target`.
double unwrap(double value, double target) {
    return value - 2.0 * kPi * std::round((value - target) / (2.0 * kPi));
}

bool near_pole(cdouble s, double radius) {
    // Poles of the integrand at s = 2 pi i k.
    const double k = std::round(s.imag() / (2.0 * kPi));
    return std::abs(s - cdouble(0.0, 2.0 * kPi * k)) < radius;
}

struct Tracer {
    cdouble z;
    double target;  // Im psi at the saddle
    const TraceOptions& opts;

    double im_residual(cdouble s) const { return unwrap(psi(s, z).imag(), target) - target; }

    /// Newton projection onto Im psi = target along grad Im psi = i conj(psi').
    bool correct(cdouble& s) const {
        for (int it = 0; it < kNewtonIterations; ++it) {
            const double f = im_residual(s);
            if (std::abs(f) < 1e-2 * opts.path_tol) {
                return true;
            }
            const cdouble grad = cdouble(0.0, 1.0) * std::conj(psi_prime(s, z));
            const double g2 = std::norm(grad);
            if (!(g2 > 0.0) || !std::isfinite(g2)) {
                return false;
            }
            s -= grad * (f / g2);
        }
        return std::abs(im_residual(s)) < opts.path_tol;
    }

    PathPoint point(cdouble s) const {
        const cdouble v = psi(s, z);
        return {s.real(), s.imag(), v.real(), unwrap(v.imag(), target)};
    }

    PathPolyline trace(const SaddleContext& ctx, cdouble s0, cdouble first_dir, bool descent,
                       BranchKind label) const {
        PathPolyline path;
        path.saddle = ctx;
        path.label = label;
        path.points.push_back(point(s0));

        // Leave the saddle along the quadratic-approximation ray; away from it
        // follow +grad Re psi = conj(psi') (descent) or its negative (ascent).
        cdouble s = s0 + opts.step * first_dir;
        double length = opts.step;
        int failures = 0;
        double step = opts.step;
        cdouble previous_dir = first_dir;
        if (!correct(s)) {
            throw CorrectionDiverged("Newton correction failed on the first step from the saddle");
        }
        path.points.push_back(point(s));

        while (true) {
            if (length >= opts.max_len) {
                path.stop = Termination::MaxLength;
                break;
            }
            if (near_pole(s, opts.step)) {
                path.stop = Termination::NearPole;
                break;
            }
            if (std::abs(path.points.back().re_psi) > kBlowUp || !std::isfinite(path.points.back().re_psi)) {
                path.stop = Termination::BlowUp;
                break;
            }
            cdouble dir = std::conj(psi_prime(s, z));
            if (!descent) {
                dir = -dir;
            }
            if (std::abs(dir) == 0.0 || !std::isfinite(std::abs(dir))) {
                path.stop = Termination::BlowUp;
                break;
            }
            dir /= std::abs(dir);
            // Keep moving away from the saddle; the gradient flips sign only
            // through a numerical wobble.
            if (std::real(dir * std::conj(previous_dir)) < 0.0) {
                dir = -dir;
            }
            cdouble candidate = s + step * dir;
            if (!correct(candidate)) {
                if (++failures >= kMaxFailures) {
                    throw CorrectionDiverged("Newton correction failed on " + std::to_string(kMaxFailures) +
                                             " consecutive steps");
                }
                step /= 2.0;
                continue;
            }
            failures = 0;
            length += std::abs(candidate - s);
            previous_dir = dir;
            s = candidate;
            step = opts.step;
            path.points.push_back(point(s));
        }
        return path;
    }
};

}  // namespace

cdouble psi(cdouble s, cdouble z) { return std::log(std::exp(s) - 1.0) - s * z; }

cdouble psi_prime(cdouble s, cdouble z) {
    const cdouble e = std::exp(s);
    return e / (e - 1.0) - z;
}

cdouble psi_second(cdouble s, cdouble z) {
    (void)z;
    const cdouble e = std::exp(s);
    return -e / ((e - 1.0) * (e - 1.0));
}

std::string to_string(BranchKind kind) {
    switch (kind) {
    case BranchKind::DescentPlus:
        return "descent+";
    case BranchKind::DescentMinus:
        return "descent-";
    case BranchKind::AscentPlus:
        return "ascent+";
    case BranchKind::AscentMinus:
        return "ascent-";
    }
    return "unknown";
}

std::string to_string(Termination t) {
    switch (t) {
    case Termination::MaxLength:
        return "max_len";
    case Termination::NearPole:
        return "near_pole";
    case Termination::BlowUp:
        return "blow_up";
    }
    return "unknown";
}

double descent_direction(const SaddleContext& ctx) {
    const cdouble second = psi_second(ctx.s.to_complex_double(), ctx.z.to_complex_double());
    if (std::abs(second) < 1e-12) {
        throw DegenerateSaddle();
    }
    // psi(s_k + u) ~ psi(s_k) + psi'' u^2/2 grows fastest where psi'' u^2 > 0.
    double theta = -0.5 * std::arg(second);
    if (theta <= -kPi / 2.0) {
        theta += kPi;
    }
    return theta;
}

std::vector<PathPolyline> trace_paths(const BigComplex& z, int saddle_index, const TraceOptions& opts) {
    if (!(opts.step > 0.0) || !(opts.max_len > 0.0) || !(opts.path_tol > 0.0)) {
        throw std::invalid_argument("trace_paths needs positive step, max_len and path_tol");
    }
    const SaddleContext ctx = SaddleContext::make(z, saddle_index);
    const double theta = descent_direction(ctx);
    const cdouble zd = z.to_complex_double();
    const cdouble s0 = ctx.s.to_complex_double();
    const Tracer tracer{zd, psi(s0, zd).imag(), opts};

    const cdouble down = std::polar(1.0, theta);
    const cdouble up = std::polar(1.0, theta > 0.0 ? theta - kPi / 2.0 : theta + kPi / 2.0);
    std::vector<PathPolyline> out;
    out.push_back(tracer.trace(ctx, s0, down, true, BranchKind::DescentPlus));
    out.push_back(tracer.trace(ctx, s0, -down, true, BranchKind::DescentMinus));
    out.push_back(tracer.trace(ctx, s0, up, false, BranchKind::AscentPlus));
    out.push_back(tracer.trace(ctx, s0, -up, false, BranchKind::AscentMinus));
    return out;
}

void write_paths_csv(std::ostream& out, const std::vector<PathPolyline>& paths) {
    const auto old_precision = out.precision(17);
    out << "branch_label,xi,eta,re_psi,saddle\n";
    for (const PathPolyline& p : paths) {
        const std::string label = to_string(p.label);
        const std::string saddle = std::to_string(p.saddle.k_index);
        for (const PathPoint& pt : p.points) {
            out << label << ',' << pt.xi << ',' << pt.eta << ',' << pt.re_psi << ',' << saddle << '\n';
        }
    }
    out.precision(old_precision);
}

}  // namespace norlund
