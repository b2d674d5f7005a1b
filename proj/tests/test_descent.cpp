#include "doctest.h"

#include "norlund/descent.hpp"
#include "norlund/errors.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

using namespace norlund;

namespace {

constexpr double kPi = std::numbers::pi;
const Precision P = Precision::digits(30);

BigComplex cz(double re, double im = 0.0) { return BigComplex(BigFloat(re, P), BigFloat(im, P)); }

const PathPolyline& branch(const std::vector<PathPolyline>& paths, BranchKind kind) {
    for (const PathPolyline& p : paths) {
        if (p.label == kind) {
            return p;
        }
    }
    throw std::logic_error("branch missing");
}

/// eta at the first crossing of xi = target, by linear interpolation.
std::optional<double> eta_at(const PathPolyline& p, double target) {
    for (std::size_t i = 1; i < p.points.size(); ++i) {
        const PathPoint& a = p.points[i - 1];
        const PathPoint& b = p.points[i];
        if ((a.xi - target) * (b.xi - target) <= 0.0 && a.xi != b.xi) {
            const double t = (target - a.xi) / (b.xi - a.xi);
            return a.eta + t * (b.eta - a.eta);
        }
    }
    return std::nullopt;
}

double max_im_drift(const PathPolyline& p) {
    double worst = 0.0;
    for (const PathPoint& pt : p.points) {
        worst = std::max(worst, std::abs(pt.im_psi - p.points.front().im_psi));
    }
    return worst;
}

}  // namespace

TEST_CASE("psi'' matches a finite-difference oracle and -h/(h-1)^2") {
    for (const cdouble z : {cdouble(2, 0), cdouble(2, 1), cdouble(0.75, 1), cdouble(2.0 / 3, 0.25)}) {
        const cdouble h = z / (z - 1.0);
        const cdouble s = std::log(h);
        const double d = 1e-5;
        const cdouble fd = (psi_prime(s + d, z) - psi_prime(s - d, z)) / (2 * d);
        const cdouble closed = -h / ((h - 1.0) * (h - 1.0));
        CHECK(std::abs(fd - closed) < 1e-8 * std::abs(closed));
        CHECK(std::abs(psi_second(s, z) - closed) < 1e-12 * std::abs(closed));
        // -h/(h-1)^2 = z(1 - z)
        CHECK(std::abs(closed - z * (1.0 - z)) < 1e-12 * std::abs(closed));
        CHECK(std::abs(psi_prime(s, z)) < 1e-12);
    }
}

TEST_CASE("descent_direction") {
    // Real x > 1: psi'' < 0, the descent line crosses the real axis vertically.
    CHECK(descent_direction(SaddleContext::make(cz(2), 0)) == doctest::Approx(kPi / 2));
    // Real 1/2 < x < 1: psi'' > 0, horizontal line through s_0.
    CHECK(descent_direction(SaddleContext::make(cz(0.75), 0)) == doctest::Approx(0.0));
    // z = 1 + i: psi'' = z(1 - z) = 1 - i.
    const double expected = -0.5 * std::arg(cdouble(1, -1));
    CHECK(descent_direction(SaddleContext::make(cz(1, 1), 0)) == doctest::Approx(expected));
}

TEST_CASE("paths for x = 2 approach eta = +-pi/x") {
    const std::vector<PathPolyline> paths = trace_paths(cz(2), 0);
    REQUIRE(paths.size() == 4);
    for (BranchKind kind : {BranchKind::DescentPlus, BranchKind::DescentMinus}) {
        const PathPolyline& p = branch(paths, kind);
        const std::optional<double> eta = eta_at(p, -20.0);
        REQUIRE(eta);
        CAPTURE(*eta);
        CHECK(std::abs(std::abs(*eta) * 2.0 / kPi - 1.0) < 0.01);
        CHECK((kind == BranchKind::DescentPlus) == (*eta > 0));
        for (std::size_t i = 1; i < p.points.size(); ++i) {
            CHECK(p.points[i].re_psi > p.points[i - 1].re_psi);
        }
    }
    // Ascent runs along the real axis, towards +infinity and into the pole at 0.
    CHECK(branch(paths, BranchKind::AscentPlus).points.back().xi > 10.0);
    const PathPolyline& left = branch(paths, BranchKind::AscentMinus);
    CHECK(left.stop == Termination::NearPole);
    for (const PathPolyline& p : paths) {
        CAPTURE(to_string(p.label));
        CHECK(max_im_drift(p) < 1e-10);
    }
}

TEST_CASE("descent branches are mirror images for real x") {
    const std::vector<PathPolyline> paths = trace_paths(cz(3), 0);
    const PathPolyline& a = branch(paths, BranchKind::DescentPlus);
    const PathPolyline& b = branch(paths, BranchKind::DescentMinus);
    REQUIRE(a.points.size() == b.points.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        worst = std::max(worst, std::abs(a.points[i].xi - b.points[i].xi));
        worst = std::max(worst, std::abs(a.points[i].eta + b.points[i].eta));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("paths for x = 3/4 are the horizontal lines eta = +-pi") {
    const std::vector<PathPolyline> upper = trace_paths(cz(0.75), 0);
    const std::vector<PathPolyline> lower = trace_paths(cz(0.75), -1);
    for (BranchKind kind : {BranchKind::DescentPlus, BranchKind::DescentMinus}) {
        double worst_up = 0.0;
        double worst_down = 0.0;
        for (const PathPoint& pt : branch(upper, kind).points) {
            worst_up = std::max(worst_up, std::abs(pt.eta - kPi));
        }
        for (const PathPoint& pt : branch(lower, kind).points) {
            worst_down = std::max(worst_down, std::abs(pt.eta + kPi));
        }
        CHECK(worst_up < 1e-8);
        CHECK(worst_down < 1e-8);
    }
    for (const PathPolyline& p : upper) {
        CHECK(max_im_drift(p) < 1e-10);
    }
}

TEST_CASE("initial tangent follows descent_direction") {
    for (const BigComplex& z : {cz(2), cz(2, 1), cz(1, 1), cz(0.75, 1)}) {
        const SaddleContext ctx = SaddleContext::make(z, 0);
        const double theta = descent_direction(ctx);
        // The chord at 10 steps turns with the path curvature (about 0.05 rad
        // at distance 0.1 for z = 2), so use a fine step here.
        TraceOptions opts;
        opts.step = 1e-3;
        const std::vector<PathPolyline> paths = trace_paths(z, 0, opts);
        const PathPolyline& p = branch(paths, BranchKind::DescentPlus);
        REQUIRE(p.points.size() > 11);
        const cdouble chord = cdouble(p.points[10].xi - p.points[0].xi, p.points[10].eta - p.points[0].eta);
        const double angle = std::arg(chord / std::polar(1.0, theta));
        CHECK(std::abs(angle) < 0.01 * kPi);
        for (const PathPolyline& q : paths) {
            CHECK(max_im_drift(q) < 1e-10);
        }
    }
}

TEST_CASE("Stokes configuration at z = 1 + i links s_0 towards s_1") {
    const std::vector<PathPolyline> paths = trace_paths(cz(1, 1), 0);
    const cdouble s1 = std::log(cdouble(1, 1) / cdouble(0, 1)) + cdouble(0, 2 * kPi);
    double closest = 1e9;
    for (const PathPolyline& p : paths) {
        for (const PathPoint& pt : p.points) {
            closest = std::min(closest, std::abs(cdouble(pt.xi, pt.eta) - s1));
        }
    }
    CHECK(closest < 0.1);
}

TEST_CASE("trace_paths rejects bad options and writes CSV") {
    TraceOptions bad;
    bad.step = 0.0;
    CHECK_THROWS_AS(trace_paths(cz(2), 0, bad), std::invalid_argument);

    TraceOptions small;
    small.max_len = 0.05;
    std::ostringstream csv;
    write_paths_csv(csv, trace_paths(cz(2), 0, small));
    const std::string text = csv.str();
    CHECK(text.rfind("branch_label,xi,eta,re_psi,saddle\n", 0) == 0);
    CHECK(text.find("descent+,") != std::string::npos);
    CHECK(text.find("ascent-,") != std::string::npos);
}
