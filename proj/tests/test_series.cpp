#include "doctest.h"

#include "norlund/ratcore.hpp"
#include "norlund/series.hpp"

#include <random>

using namespace norlund;

namespace {

const Precision kP = Precision::digits(60);

BigComplex c(long re, long im = 0) { return BigComplex(BigFloat(re, kP), BigFloat(im, kP)); }

BigComplex cq(const Rational& re, const Rational& im = 0) { return BigComplex(re, im, kP); }

ComplexSeries series_of(std::initializer_list<long> values) {
    std::vector<BigComplex> v;
    for (long x : values) {
        v.push_back(c(x));
    }
    return ComplexSeries(std::move(v));
}

/// Largest coefficient modulus of a - b.
BigFloat max_residual(const ComplexSeries& a, const ComplexSeries& b) {
    BigFloat worst(0L, kP);
    for (std::size_t k = 0; k < std::min(a.order(), b.order()); ++k) {
        const BigFloat r = abs(a[k] - b[k]);
        if (r > worst) {
            worst = r;
        }
    }
    return worst;
}

bool below(const BigFloat& x, long exponent10) { return x < pow10(exponent10, kP); }

ComplexSeries random_series(std::mt19937& rng, std::size_t order, bool zero_constant) {
    // Leading term of unit size, the rest inside a disk shrinking like 2^-k so
    // that the inverse series stays well scaled.
    std::uniform_int_distribution<long> d(-1000, 1000);
    ComplexSeries s(order, c(0));
    const std::size_t lead = zero_constant ? 1 : 0;
    for (std::size_t k = lead; k < order; ++k) {
        Rational scale_k(1, 1000);
        scale_k /= mpz_class(1) << static_cast<unsigned>(k - lead);
        s[k] = cq(Rational(d(rng)) * scale_k, Rational(d(rng)) * scale_k);
    }
    if (order > lead) {
        const BigFloat angle(static_cast<double>(d(rng)) / 300.0, kP);
        s[lead] = BigComplex(cos(angle), sin(angle));
    }
    return s;
}

}  // namespace

TEST_CASE("mul and add examples") {
    const ComplexSeries a = series_of({1, 1, 0});
    const ComplexSeries b = series_of({1, -1, 0});
    CHECK(below(max_residual(a * b, series_of({1, 0, -1})), -55));

    const ComplexSeries s = series_of({1, 1, 1});
    CHECK(below(max_residual(s * s, series_of({1, 2, 3})), -55));
    CHECK(below(max_residual(s * series_of({1, 0, 0}), s), -55));

    CHECK(below(max_residual(s + b, series_of({2, 0, 1})), -55));
    CHECK(below(max_residual(scale(s, 3L), series_of({3, 3, 3})), -55));
}

TEST_CASE("orders combine to the minimum") {
    const ComplexSeries a = series_of({1, 2, 3, 4});
    const ComplexSeries b = series_of({1, 2});
    CHECK((a * b).order() == 2);
    CHECK((a + b).order() == 2);
    CHECK(div(a, b).order() == 2);
}

TEST_CASE("div examples") {
    CHECK(below(max_residual(div(series_of({1, 0, 0, 0}), series_of({1, -1, 0, 0})), series_of({1, 1, 1, 1})), -55));
    const ComplexSeries a = series_of({3, -2, 5, 7});
    CHECK(below(max_residual(div(a, a), series_of({1, 0, 0, 0})), -55));
    CHECK_THROWS_AS(div(a, series_of({0, 1, 0, 0})), ZeroConstantTerm);
}

TEST_CASE("t/(e^t-1) in extended precision matches the exact base series") {
    const std::size_t order = 12;
    ComplexSeries t(order, c(0));
    t[1] = c(1);
    ComplexSeries em1(order, c(0));  // e^t - 1 = t + t^2/2 + ...
    BigFloat fact(1L, kP);
    for (std::size_t k = 1; k < order; ++k) {
        fact *= static_cast<long>(k);
        em1[k] = BigComplex(BigFloat(1L, kP) / fact);
    }
    // t/(e^t - 1) = 1/((e^t - 1)/t)
    const ComplexSeries ratio = div(series_of({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}), shift_down(em1, 1));
    const RationalSeries exact = base_series(order - 1);
    for (std::size_t k = 0; k < ratio.order(); ++k) {
        CHECK(below(abs(ratio[k] - cq(exact[k])), -55));
    }
}

TEST_CASE("exact rational series algebra") {
    // (1+t+t^2)^2 = 1 + 2t + 3t^2 + ...
    const RationalSeries s{1, 1, 1};
    CHECK((s * s).coefficients() == std::vector<Rational>{1, 2, 3});
    // w = u + u^2  ->  u = w - w^2 + 2w^3
    const RationalSeries w{0, 1, 1, 0};
    CHECK(revert(w).coefficients() == std::vector<Rational>{0, 1, -1, 2});
    // log(1+t) = t - t^2/2 + t^3/3
    const RationalSeries t{0, 1, 0, 0};
    CHECK(log1p_compose(t).coefficients() == std::vector<Rational>{0, 1, Rational(-1, 2), Rational(1, 3)});
    CHECK(log1p_compose(RationalSeries{0, 0, 0}).coefficients() == std::vector<Rational>{0, 0, 0});
}

TEST_CASE("log1p_compose of e^t - 1 recovers t") {
    const std::size_t order = 3;
    ComplexSeries em1(order, c(0));
    em1[1] = c(1);
    em1[2] = BigComplex(BigFloat(1L, kP) / 2L);
    const ComplexSeries l = log1p_compose(em1);
    CHECK(below(max_residual(l, series_of({0, 1, 0})), -55));
    CHECK_THROWS_AS(log1p_compose(series_of({1, 1})), NonzeroConstantTerm);
}

TEST_CASE("sqrt_series examples") {
    const ComplexSeries s = sqrt_series(series_of({1, 1, 0, 0}), c(1));
    // 1 + t/2 - t^2/8 + t^3/16
    CHECK(below(max_residual(s, ComplexSeries{c(1), cq(Rational(1, 2)), cq(Rational(-1, 8)), cq(Rational(1, 16))}), -55));

    const ComplexSeries neg = sqrt_series(series_of({4}), c(-2));
    CHECK(below(abs(neg[0] - c(-2)), -55));

    // branch target i selects +i for sqrt(-1), -i selects -i
    CHECK(below(abs(sqrt_series(series_of({-1}), c(0, 1))[0] - c(0, 1)), -55));
    CHECK(below(abs(sqrt_series(series_of({-1}), c(0, -1))[0] - c(0, -1)), -55));

    CHECK_THROWS_AS(sqrt_series(series_of({4}), c(0, 1)), AmbiguousBranch);
    CHECK_THROWS_AS(sqrt_series(series_of({0, 1}), c(1)), ZeroConstantTerm);
}

TEST_CASE("revert errors and identity") {
    const ComplexSeries id = series_of({0, 1, 0, 0, 0});
    CHECK(below(max_residual(revert(id), id), -55));
    CHECK_THROWS_AS(revert(series_of({0, 0, 1})), ZeroLinearTerm);
    CHECK_THROWS_AS(revert(series_of({1, 1, 1})), NonzeroConstantTerm);
}

TEST_CASE("property: compose(w, revert(w)) is the identity") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t order = 2 + static_cast<std::size_t>(trial) * 28 / 11;
        const ComplexSeries w = random_series(rng, order, true);
        const ComplexSeries u = revert(w);
        ComplexSeries t(order, c(0));
        if (order > 1) {
            t[1] = c(1);
        }
        CAPTURE(order);
        CHECK(below(max_residual(compose(w, u), t), -60 + 8));
        CHECK(below(max_residual(compose(u, w), t), -60 + 8));
    }
}

TEST_CASE("property: div inverts mul and sqrt squares back") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t order = 3 + static_cast<std::size_t>(trial) * 3;
        const ComplexSeries a = random_series(rng, order, false);
        const ComplexSeries b = random_series(rng, order, false);
        CHECK(below(max_residual(div(a * b, b), a), -52));
        const ComplexSeries r = sqrt_series(a, c(1));
        CHECK(below(max_residual(r * r, a), -52));
    }
}

TEST_CASE("property: lower coefficients do not depend on truncation order") {
    std::mt19937 rng(3);
    const ComplexSeries w = random_series(rng, 24, true);
    const ComplexSeries long_inverse = revert(w);
    const ComplexSeries short_inverse = revert(w.truncated(10));
    CHECK(below(max_residual(long_inverse.truncated(10), short_inverse), -52));

    const ComplexSeries a = random_series(rng, 24, false);
    CHECK(below(max_residual(div(series_of({1}), a.truncated(1)), div(series_of({1, 0, 0}), a).truncated(1)), -55));
    CHECK(below(max_residual(log1p_compose(w).truncated(8), log1p_compose(w.truncated(8))), -52));
}
