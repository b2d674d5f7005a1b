#include "norlund/saddle.hpp"

#include "norlund/errors.hpp"

#include <array>
#include <stdexcept>

namespace norlund {

namespace {

BigComplex horner(const BigComplex& x, std::initializer_list<long> ascending) {
    const std::vector<long> c(ascending);
    BigComplex acc(0L, x.precision());
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = acc * x + c[k];
    }
    return acc;
}

bool is_real(const BigComplex& z) { return z.im.is_zero(); }

}  // namespace

BigComplex saddle_point(const BigComplex& z, int k) {
    const Precision p = z.precision();
    if (z.is_zero() || (is_real(z) && z.re == 1L)) {
        throw PoleArgument();
    }
    const BigComplex h = z / (z - 1L);
    BigComplex s = log(h);
    s.im += pi(p) * static_cast<long>(2 * k);
    return s;
}

BigComplex phase(const BigComplex& s, const BigComplex& z) { return log(exp(s) - 1L) - s * z; }

SaddleContext SaddleContext::make(const BigComplex& z, int k) {
    SaddleContext ctx;
    ctx.z = z;
    ctx.s = saddle_point(z, k);
    ctx.h = z / (z - 1L);
    ctx.k_index = k;
    if (is_real(z) && z.re > 0L && z.re < 1L) {
        const Precision p = z.precision();
        const BigFloat log_h = log(z.re / (1L - z.re));
        ctx.L = sqrt(log_h * log_h + pi(p) * pi(p));
        ctx.omega = atan2(pi(p), log_h);
    }
    return ctx;
}

ComplexSeries phase_series(const SaddleContext& ctx, std::size_t order) {
    if (order < 3) {
        throw std::invalid_argument("phase_series needs order >= 3");
    }
    const Precision p = ctx.z.precision();
    // Since e^{s_k} = h and h/(h-1) = z:
    //   psi(s_k + u) - psi(s_k) = log((h e^u - 1)/(h - 1)) - z u
    //                           = log(1 + z (e^u - 1)) - z u.
    // The 2 pi i k ambiguity of the logarithm drops out of the difference.
    ComplexSeries expm1(order, BigComplex(0L, p));
    BigFloat inv_fact(1L, p);
    for (std::size_t k = 1; k < order; ++k) {
        inv_fact /= static_cast<long>(k);
        expm1[k] = ctx.z * inv_fact;
    }
    ComplexSeries out = log1p_compose(expm1);
    out[1] -= ctx.z;

    const BigFloat tol = pow10(-(p.decimal_digits() - 10), p);
    if (abs(out[0]) > tol || abs(out[1]) > tol * (abs(ctx.z) + BigFloat(1L, p))) {
        throw PrecisionFailure("phase series does not vanish to first order at the saddle");
    }
    out[0] = BigComplex(0L, p);
    out[1] = BigComplex(0L, p);
    return out;
}

namespace {

std::vector<BigComplex> even_coefficients(const SaddleContext& ctx, std::size_t K, const ComplexSeries& half_q2,
                                          const BigComplex& branch_target, BigComplex& g0) {
    const std::size_t n = half_q2.order();
    // w = u q(u) with q = sqrt(2 (psi - psi_k)/u^2)
    const ComplexSeries q = sqrt_series(half_q2, branch_target);
    ComplexSeries w(n + 1, BigComplex(0L, ctx.z.precision()));
    for (std::size_t k = 0; k < n; ++k) {
        w[k + 1] = q[k];
    }
    const ComplexSeries u = revert(w);
    const ComplexSeries du = derivative(u);
    ComplexSeries s_of_w = u.truncated(du.order());
    s_of_w[0] += ctx.s;
    const ComplexSeries g = div(du, s_of_w);

    g0 = g[0];
    std::vector<BigComplex> values;
    values.reserve(K + 1);
    for (std::size_t j = 0; j <= K; ++j) {
        values.push_back(g[2 * j] / g0);
    }
    return values;
}

}  // namespace

CoefficientSet expansion_coefficients(const SaddleContext& ctx, std::size_t K, bool verify_branch) {
    const Precision p = ctx.z.precision();
    const std::size_t order = PrecisionConfig::series_order(K);
    const ComplexSeries phase_k = phase_series(ctx, order + 2);
    const ComplexSeries half_q2 = scale(shift_down(phase_k, 2), 2L);

    // Branch: du/dw at w = 0 equals i (h-1)/h^{1/2}, i.e. q_0 = -i h^{1/2}/(h-1).
    const BigComplex target = -BigComplex::i(p) * sqrt(ctx.h) / (ctx.h - 1L);

    CoefficientSet out;
    out.saddle = ctx;
    out.values = even_coefficients(ctx, K, half_q2, target, out.g0);
    out.values[0] = BigComplex(1L, p);

    if (verify_branch) {
        BigComplex other_g0;
        const std::vector<BigComplex> other = even_coefficients(ctx, K, half_q2, -target, other_g0);
        const BigFloat tol = pow10(-(p.decimal_digits() - 20), p);
        for (std::size_t j = 1; j <= K; ++j) {
            if (abs(other[j] - out.values[j]) > tol * (abs(out.values[j]) + BigFloat(1L, p))) {
                throw PrecisionFailure("expansion coefficients depend on the square-root branch");
            }
        }
    }
    return out;
}

BigComplex closed_form_A(const BigComplex& h, const BigComplex& lambda, int k) {
    const Precision p = h.precision();
    const BigComplex hm1 = h - 1L;
    const BigComplex hp1 = h + 1L;
    const BigComplex inv = BigComplex(1L, p) / lambda;
    const BigComplex inv2 = inv * inv;
    const BigComplex inv3 = inv2 * inv;
    const BigComplex h2 = h * h;
    const BigComplex hm1_2 = hm1 * hm1;
    const BigComplex hm1_3 = hm1_2 * hm1;
    const BigComplex hm1_4 = hm1_2 * hm1_2;
    const BigComplex quad = horner(h, {1, -1, 1});  // 1 - h + h^2
    switch (k) {
    case 1: {
        BigComplex brace = -quad + 6L * (h2 - 1L) * inv - 12L * hm1_2 * inv2;
        return brace / (12L * h);
    }
    case 2: {
        BigComplex brace = quad * quad - 12L * inv * (h2 - 1L) * horner(h, {3, -5, 3}) +
                           120L * inv2 * hm1_2 * horner(h, {2, 1, 2}) - 720L * inv3 * hp1 * hm1_3 +
                           864L * inv2 * inv2 * hm1_4;
        return brace / (864L * h2);
    }
    case 3: {
        const BigComplex upsilon = horner(h, {139, -417, 402, -109, 402, -417, 139});
        const BigComplex inv4 = inv2 * inv2;
        BigComplex brace = upsilon + 90L * inv * (h2 - 1L) * quad * horner(h, {5, -9, 5}) -
                           1260L * inv2 * hm1_2 * horner(h, {13, -8, -3, -8, 13}) +
                           15120L * inv3 * hm1_3 * hp1 * horner(h, {8, -5, 8}) -
                           453600L * inv4 * hm1_4 * horner(h, {1, 1, 1}) +
                           907200L * inv4 * inv * hm1_4 * hm1 * hp1 - 777600L * inv3 * inv3 * hm1_3 * hm1_3;
        return brace / (777600L * h2 * h);
    }
    default:
        throw std::invalid_argument("closed_form_A is available for k = 1, 2, 3");
    }
}

BigFloat closed_form_C(int k, Precision p) {
    // Numerators as ascending polynomials in pi^2, over denominator * pi^(2k).
    static const std::array<std::vector<long>, 6> numerators{{
        {1},
        {16, -1},
        {1536, -160, 1},
        {368640, -53760, 1456, 15},
        {165150720, -30965760, 1483776, -3904, -63},
        {39636172800, -9083289600, 624476160, -10081280, -92048, -1995},
    }};
    static const std::array<long, 6> denominators{1, 4, 96, 5760, 645120, 38707200};
    if (k < 0 || k > 5) {
        throw std::invalid_argument("closed_form_C is available for k = 0..5");
    }
    const BigFloat pi2 = pi(p) * pi(p);
    const std::vector<long>& c = numerators[static_cast<std::size_t>(k)];
    BigFloat acc(0L, p);
    for (std::size_t j = c.size(); j-- > 0;) {
        acc = acc * pi2 + c[j];
    }
    return acc / (pow(pi2, static_cast<long>(k)) * denominators[static_cast<std::size_t>(k)]);
}

}  // namespace norlund
