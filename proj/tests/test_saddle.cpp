#include "doctest.h"

#include "norlund/errors.hpp"
#include "norlund/saddle.hpp"

#include <string>

using namespace norlund;

namespace {

const Precision P60 = Precision::digits(60);

BigComplex cz(double re, double im = 0.0) { return BigComplex(BigFloat(re, P60), BigFloat(im, P60)); }

BigComplex rational_z(long pn, long pd, long qn = 0, long qd = 1) {
    mpq_class re(pn, pd), im(qn, qd);
    re.canonicalize();
    im.canonicalize();
    return BigComplex(re, im, P60);
}

BigComplex parse_c(const std::string& re, const std::string& im) {
    return BigComplex(BigFloat::parse(re, P60), BigFloat::parse(im, P60));
}

BigFloat rel(const BigComplex& a, const BigComplex& b) { return abs(a - b) / abs(b); }

// Independent route to g_m = [w^m] (du/dw)/(s + u): Lagrange-Burmann gives
// [w^m] f(u(w)) u'(w) = [u^m] f(u) (u/w(u))^{m+1}, with u/w(u) = 1/q(u).
// No series reversion involved.
std::vector<BigComplex> lagrange_burmann_A(const SaddleContext& ctx, std::size_t K) {
    const std::size_t order = 2 * K + 4;
    const ComplexSeries phase_k = phase_series(ctx, order + 2);
    const ComplexSeries half_q2 = scale(shift_down(phase_k, 2), 2L);
    const BigComplex target = -BigComplex::i(P60) * sqrt(ctx.h) / (ctx.h - 1L);
    const ComplexSeries q = sqrt_series(half_q2, target).truncated(order);
    ComplexSeries one(order, BigComplex(0L, P60));
    one[0] = BigComplex(1L, P60);
    const ComplexSeries inv_q = div(one, q);
    ComplexSeries s_plus_u(order, BigComplex(0L, P60));
    s_plus_u[0] = ctx.s;
    s_plus_u[1] = BigComplex(1L, P60);
    const ComplexSeries f = div(one, s_plus_u);

    std::vector<BigComplex> g;
    for (std::size_t m = 0; m <= 2 * K; m += 2) {
        const ComplexSeries integrand = f * pow(inv_q, static_cast<unsigned long>(m + 1));
        g.push_back(integrand[m]);
    }
    std::vector<BigComplex> a;
    for (const BigComplex& gm : g) {
        a.push_back(gm / g[0]);
    }
    return a;
}

}  // namespace

TEST_CASE("saddle_point examples") {
    const BigComplex s = saddle_point(cz(2), 0);
    CHECK(abs(s - BigComplex(log(BigFloat(2L, P60)))) < BigFloat(1e-55, P60));

    const BigComplex mid = saddle_point(cz(0.5), -1);
    CHECK(abs(mid - BigComplex(BigFloat(0L, P60), -pi(P60))) < BigFloat(1e-55, P60));

    const BigComplex s1 = saddle_point(cz(2), 1);
    CHECK(abs(s1 - (s + BigComplex(BigFloat(0L, P60), pi(P60) * 2L))) < BigFloat(1e-55, P60));

    CHECK_THROWS_AS(saddle_point(cz(0), 0), PoleArgument);
    CHECK_THROWS_AS(saddle_point(cz(1), 0), PoleArgument);
}

TEST_CASE("SaddleContext invariants") {
    const SaddleContext above = SaddleContext::make(cz(3), 0);
    CHECK(above.s.im.is_zero());
    CHECK(above.s.re > 0L);
    CHECK(!above.L);
    CHECK(abs(exp(above.s) - above.h) < BigFloat(1e-55, P60));

    const SaddleContext below = SaddleContext::make(rational_z(3, 4), -1);
    REQUIRE(below.L);
    REQUIRE(below.omega);
    // s_{-1} = L e^{-i omega}
    const BigComplex polar = BigComplex(*below.L) * exp(BigComplex(BigFloat(0L, P60), -*below.omega));
    CHECK(rel(polar, below.s) < BigFloat(1e-55, P60));
    CHECK(abs(below.s.im + pi(P60)) < BigFloat(1e-55, P60));
}

TEST_CASE("phase_series low coefficients at z = 2") {
    const SaddleContext ctx = SaddleContext::make(cz(2), 0);
    const ComplexSeries p = phase_series(ctx, 6);
    CHECK(p[0].is_zero());
    CHECK(p[1].is_zero());
    CHECK(abs(p[2] + 1L) < BigFloat(1e-55, P60));
    CHECK(abs(p[3] - 1L) < BigFloat(1e-55, P60));
    CHECK_THROWS_AS(phase_series(ctx, 2), std::invalid_argument);
}

TEST_CASE("phase_series quadratic coefficient is psi''/2") {
    for (const BigComplex& z : {cz(1.5), cz(2, 1), cz(0.75, 1), rational_z(2, 3, 1, 4)}) {
        const SaddleContext ctx = SaddleContext::make(z, 0);
        const ComplexSeries p = phase_series(ctx, 4);
        const BigComplex expected = -ctx.h / ((ctx.h - 1L) * (ctx.h - 1L) * 2L);
        CHECK(rel(p[2], expected) < BigFloat(1e-55, P60));
    }
}

TEST_CASE("expansion coefficients reproduce the printed table at z = 2/3 + i/4") {
    const SaddleContext ctx = SaddleContext::make(rational_z(2, 3, 1, 4), 0);
    const CoefficientSet c = expansion_coefficients(ctx, 10, true);
    CHECK(abs(c.values[0] - 1L).is_zero());

    // Rows with all printed digits reproduced.
    const std::vector<std::pair<int, BigComplex>> printed{
        {1, parse_c("-1.0029378942e-01", "-1.8804724469e-02")},
        {2, parse_c("-3.7372334426e-03", "-5.5650719166e-04")},
        {3, parse_c("1.8095948417e-05", "1.5684946154e-04")},
        {4, parse_c("5.9175620462e-05", "1.3608152444e-04")},
        {5, parse_c("5.6624929259e-06", "5.2629558202e-06")},
        {7, parse_c("8.6041310199e-08", "-2.5286915962e-07")},
        {8, parse_c("-1.0224648657e-07", "-8.6048696324e-08")},
    };
    for (const auto& [k, v] : printed) {
        CAPTURE(k);
        CHECK(abs(c.values[k].re - v.re) <= abs(v.re) * BigFloat(1e-10, P60));
        CHECK(abs(c.values[k].im - v.im) <= abs(v.im) * BigFloat(1e-10, P60));
    }

    // The printed k=6 real part carries exponent -03 and the k=9 imaginary part
    // ends in ...880; the engine values below are confirmed by the oracle test.
    CHECK(abs(c.values[6].re - BigFloat::parse("3.2408350155e-06", P60)) < BigFloat(1e-16, P60));
    CHECK(abs(c.values[9].re - BigFloat::parse("-8.4341941837e-09", P60)) < BigFloat(1e-19, P60));
    CHECK(abs(c.values[9].im - BigFloat::parse("-3.2178913877e-10", P60)) < BigFloat(1e-20, P60));
    // The printed k=10 row repeats k=5; the engine value is different.
    CHECK(abs(c.values[10] - c.values[5]) > BigFloat(1e-6, P60));
}

TEST_CASE("expansion coefficients agree with an independent Lagrange-Burmann oracle") {
    for (const auto& [z, k] : std::vector<std::pair<BigComplex, int>>{
             {rational_z(2, 3, 1, 4), 0}, {cz(2), 0}, {cz(0.75, 1), 1}, {cz(0.5), -1}}) {
        const SaddleContext ctx = SaddleContext::make(z, k);
        const CoefficientSet c = expansion_coefficients(ctx, 12);
        const std::vector<BigComplex> oracle = lagrange_burmann_A(ctx, 12);
        for (std::size_t j = 1; j <= 12; ++j) {
            CAPTURE(j);
            CHECK(rel(c.values[j], oracle[j]) < BigFloat(1e-40, P60));
        }
    }
}

TEST_CASE("engine matches closed forms on a grid") {
    struct Point {
        BigComplex z;
        int saddle;
    };
    const std::vector<Point> grid{
        {cz(2), 0},           {cz(3), 0},        {cz(1.5), 0},          {cz(2, 1), 0},
        {cz(0.75, 1), 0},     {cz(0.75, 1), 1},  {rational_z(2, 3, 1, 4), 0}, {rational_z(3, 4), -1},
        {rational_z(3, 5), -1}, {cz(1.2, 0.25), 0}, {cz(0.9, 0.25), 1},     {cz(5, -2), 0},
    };
    for (const Point& pt : grid) {
        const SaddleContext ctx = SaddleContext::make(pt.z, pt.saddle);
        const CoefficientSet c = expansion_coefficients(ctx, 3, true);
        for (int k = 1; k <= 3; ++k) {
            CAPTURE(to_string(pt.z, 6));
            CAPTURE(k);
            CHECK(rel(c.values[k], closed_form_A(ctx.h, ctx.s, k)) < BigFloat(1e-40, P60));
        }
    }
}

TEST_CASE("closed_form_A examples") {
    const BigComplex h = BigComplex(-1L, P60);
    const BigComplex lambda(BigFloat(0L, P60), -pi(P60));
    const BigFloat pi2 = pi(P60) * pi(P60);
    const BigComplex a1 = closed_form_A(h, lambda, 1);
    CHECK(abs(a1 - BigComplex(BigFloat(0.25, P60) - BigFloat(4L, P60) / pi2)) < BigFloat(1e-55, P60));

    // Only the lambda-free term survives as 1/lambda -> 0.
    const BigComplex h2 = cz(2, 1);
    const BigComplex huge(BigFloat::parse("1e40", P60));
    const BigComplex limit = -(h2 * h2 - h2 + 1L) / (h2 * 12L);
    CHECK(rel(closed_form_A(h2, huge, 1), limit) < BigFloat(1e-35, P60));

    CHECK_THROWS_AS(closed_form_A(h, lambda, 4), std::invalid_argument);
}

TEST_CASE("closed_form_C examples and midpoint identity") {
    const BigFloat pi2 = pi(P60) * pi(P60);
    CHECK(closed_form_C(0, P60) == BigFloat(1L, P60));
    CHECK(abs(closed_form_C(1, P60) - (16L - pi2) / (pi2 * 4L)) < BigFloat(1e-55, P60));
    const BigFloat c3 = (368640L - 53760L * pi2 + 1456L * pi2 * pi2 + 15L * pi2 * pi2 * pi2) /
                        (5760L * pi2 * pi2 * pi2);
    CHECK(abs(closed_form_C(3, P60) - c3) < BigFloat(1e-55, P60));
    CHECK_THROWS_AS(closed_form_C(6, P60), std::invalid_argument);

    const SaddleContext ctx = SaddleContext::make(cz(0.5), -1);
    const CoefficientSet c = expansion_coefficients(ctx, 5);
    for (int k = 0; k <= 5; ++k) {
        CAPTURE(k);
        const BigFloat engine = k % 2 == 0 ? c.values[k].re : -c.values[k].re;
        const BigFloat closed = closed_form_C(k, P60);
        CHECK(abs(engine - closed) <= abs(closed) * BigFloat(1e-40, P60));
    }
}

TEST_CASE("coefficients are real above x = 1") {
    for (double x : {1.5, 2.0, 4.0}) {
        const CoefficientSet c = expansion_coefficients(SaddleContext::make(cz(x), 0), 10);
        for (std::size_t k = 0; k <= 10; ++k) {
            CAPTURE(x);
            CAPTURE(k);
            CHECK(abs(c.values[k].im) < BigFloat(1e-40, P60));
        }
    }
}

TEST_CASE("conjugate saddles give conjugate coefficients on the unit interval") {
    for (const BigComplex& z : {rational_z(3, 4), rational_z(3, 5)}) {
        const CoefficientSet upper = expansion_coefficients(SaddleContext::make(z, 0), 8);
        const CoefficientSet lower = expansion_coefficients(SaddleContext::make(z, -1), 8);
        for (std::size_t k = 1; k <= 8; ++k) {
            CHECK(rel(upper.values[k], conj(lower.values[k])) < BigFloat(1e-40, P60));
        }
    }
}

TEST_CASE("leading coefficient g0 matches i(h-1)/(s h^{1/2})") {
    for (const BigComplex& z : {cz(2), cz(2, 1), rational_z(2, 3, 1, 4), cz(0.75, 1)}) {
        const SaddleContext ctx = SaddleContext::make(z, 0);
        const CoefficientSet c = expansion_coefficients(ctx, 1);
        const BigComplex expected = BigComplex::i(P60) * (ctx.h - 1L) / (ctx.s * sqrt(ctx.h));
        CHECK(abs(abs(c.g0) - abs(expected)) < BigFloat(1e-50, P60));
        // Same argument modulo pi.
        const BigComplex ratio = c.g0 / expected;
        CHECK(abs(ratio.im) < BigFloat(1e-50, P60));
    }
}
