#include "norlund/asymp.hpp"

#include "norlund/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace norlund {

std::string to_string(RegimeKind kind) {
    switch (kind) {
    case RegimeKind::RealGreaterOne:
        return "RealGreaterOne";
    case RegimeKind::RealUnitInterval:
        return "RealUnitInterval";
    case RegimeKind::RealHalf:
        return "RealHalf";
    case RegimeKind::ComplexWithS1:
        return "ComplexWithS1";
    case RegimeKind::ComplexS0Only:
        return "ComplexS0Only";
    case RegimeKind::StokesLine:
        return "StokesLine";
    }
    return "Unknown";
}

std::string Regime::name() const {
    std::string out = to_string(kind);
    if (conjugated) {
        out = "Conjugated(" + out + ")";
    }
    if (reflected) {
        out = "Reflected(" + out + ")";
    }
    return out;
}

BigComplex partial_sum(const AsymptoticResult& r, std::size_t k) {
    BigComplex acc(0L, r.prefactor.precision());
    for (std::size_t j = 0; j <= k && j < r.terms.size(); ++j) {
        acc += r.terms[j];
    }
    return r.prefactor * acc;
}

std::vector<BigFloat> gaussian_moment_weights(unsigned n, std::size_t K, Precision p) {
    // w_k = w_{k-1} (2k - 1)/n
    std::vector<BigFloat> w;
    w.reserve(K + 1);
    w.emplace_back(1L, p);
    for (std::size_t k = 1; k <= K; ++k) {
        w.push_back(w.back() * static_cast<long>(2 * k - 1) / static_cast<long>(n));
    }
    return w;
}

namespace {

BigFloat sqrt_two_pi_n(unsigned n, Precision p) { return sqrt(pi(p) * static_cast<long>(2 * n)); }

void require_n(unsigned n) {
    if (n == 0) {
        throw RegimeViolation("the large-n expansions need n >= 1");
    }
}

/// Fills value / truncation / error estimate from prefactor and K+2 terms.
AsymptoticResult finish(AsymptoticResult r, std::size_t K) {
    const BigComplex next = r.terms.size() > K + 1 ? r.terms[K + 1] : BigComplex(0L, r.prefactor.precision());
    r.terms.resize(K + 1);
    r.truncation_k = K;
    r.value = partial_sum(r, K);
    r.error_estimate = abs(r.prefactor * next);
    return r;
}

/// Dominant-saddle sum shared by S0 and theorem1: terms w_k A_k(h, s_k).
std::vector<BigComplex> weighted_terms(unsigned n, const CoefficientSet& coeffs, Precision p) {
    const std::vector<BigFloat> w = gaussian_moment_weights(n, coeffs.values.size() - 1, p);
    std::vector<BigComplex> terms;
    terms.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        terms.push_back(coeffs.values[k] * w[k]);
    }
    return terms;
}

BigFloat distance_to_unit_segment(const BigComplex& z) {
    if (z.re < 0L) {
        return abs(z);
    }
    if (z.re > 1L) {
        return abs(z - 1L);
    }
    return abs(z.im);
}

}  // namespace

AsymptoticResult theorem1(unsigned n, const BigFloat& x_in, std::size_t K, const PrecisionConfig& cfg) {
    require_n(n);
    const Precision p = cfg.precision();
    const BigFloat x = x_in.with_precision(p);
    if (!(x > BigFloat(1.0 + cfg.exclusion_eps, p))) {
        throw RegimeViolation("theorem1 needs x > 1 + " + std::to_string(cfg.exclusion_eps));
    }
    const SaddleContext ctx = SaddleContext::make(BigComplex(x), 0);
    const CoefficientSet coeffs = expansion_coefficients(ctx, K + 1);
    const BigFloat s0 = ctx.s.re;
    const BigFloat h = ctx.h.re;

    AsymptoticResult r;
    r.regime = Regime{RegimeKind::RealGreaterOne};
    // n!/sqrt(2 pi n) (x-1)^{n-1} / log h * h^{n x - 1/2}
    BigFloat pre = factorial(n, p) / sqrt_two_pi_n(n, p) * pow(x - 1L, static_cast<long>(n) - 1) / s0 *
                   exp((x * static_cast<long>(n) - BigFloat(0.5, p)) * s0);
    r.prefactor = BigComplex(pre);
    r.terms = weighted_terms(n, coeffs, p);
    for (BigComplex& t : r.terms) {
        t.im = BigFloat(0L, p);  // real to working precision
    }
    return finish(std::move(r), K);
}

AsymptoticResult theorem2(unsigned n, const BigFloat& x_in, std::size_t K, const PrecisionConfig& cfg) {
    require_n(n);
    const Precision p = cfg.precision();
    const BigFloat x = x_in.with_precision(p);
    if (x < BigFloat(0.5, p) || !(x < BigFloat(1.0 - cfg.exclusion_eps, p))) {
        throw RegimeViolation("theorem2 needs 1/2 <= x < 1 - " + std::to_string(cfg.exclusion_eps));
    }
    const SaddleContext ctx = SaddleContext::make(BigComplex(x), -1);
    const CoefficientSet coeffs = expansion_coefficients(ctx, K + 1);
    const BigFloat& L = *ctx.L;
    const BigFloat& omega = *ctx.omega;
    const BigFloat h = x / (1L - x);
    const long nl = static_cast<long>(n);
    const BigFloat theta = pi(p) * x * nl - omega + pi(p) / 2L;
    const BigFloat cos_t = cos(theta);
    const BigFloat sin_t = sin(theta);

    AsymptoticResult r;
    r.regime = Regime{RegimeKind::RealUnitInterval};
    // 2 (-1)^n n!/sqrt(2 pi n) (1-x)^{n-1}/L h^{n x - 1/2}
    BigFloat pre = 2L * factorial(n, p) / sqrt_two_pi_n(n, p) * pow(1L - x, nl - 1) / L *
                   exp((x * nl - BigFloat(0.5, p)) * log(h));
    if (n % 2 == 1) {
        pre = -pre;
    }
    r.prefactor = BigComplex(pre);
    const std::vector<BigFloat> w = gaussian_moment_weights(n, K + 1, p);
    for (std::size_t k = 0; k <= K + 1; ++k) {
        const BigComplex& a = coeffs.values[k];
        r.terms.emplace_back(w[k] * (cos_t * a.re + sin_t * a.im));
    }
    return finish(std::move(r), K);
}

AsymptoticResult half_case(unsigned n, std::size_t K, const PrecisionConfig& cfg) {
    require_n(n);
    const Precision p = cfg.precision();
    AsymptoticResult r;
    r.regime = Regime{RegimeKind::RealHalf};
    if (n % 2 == 1) {
        // B_n^(n)(n/2) vanishes identically for odd n.
        r.prefactor = BigComplex(0L, p);
        r.terms.assign(K + 1, BigComplex(0L, p));
        r.truncation_k = K;
        r.value = BigComplex(0L, p);
        r.error_estimate = BigFloat(0L, p);
        return r;
    }
    // 2^{2-n} n!/sqrt(2 pi n) cos(pi n/2)/pi, with cos(pi n/2) = (-1)^{n/2}
    BigFloat pre = pow(BigFloat(2L, p), 2L - static_cast<long>(n)) * factorial(n, p) / sqrt_two_pi_n(n, p) / pi(p);
    if ((n / 2) % 2 == 1) {
        pre = -pre;
    }
    r.prefactor = BigComplex(pre);

    std::vector<BigFloat> c;
    for (std::size_t k = 0; k <= std::min<std::size_t>(K + 1, 5); ++k) {
        c.push_back(closed_form_C(static_cast<int>(k), p));
    }
    if (K + 1 > 5) {
        // C_k = (-1)^k Re A_k(-1, -pi i)
        const SaddleContext ctx = SaddleContext::make(BigComplex(BigFloat(0.5, p)), -1);
        const CoefficientSet coeffs = expansion_coefficients(ctx, K + 1);
        for (std::size_t k = 6; k <= K + 1; ++k) {
            c.push_back(k % 2 == 0 ? coeffs.values[k].re : -coeffs.values[k].re);
        }
    }
    const std::vector<BigFloat> w = gaussian_moment_weights(n, K + 1, p);
    for (std::size_t k = 0; k <= K + 1; ++k) {
        // (-2)^k (1/2)_k / n^k C_k
        BigFloat t = w[k] * c[k];
        r.terms.emplace_back(k % 2 == 0 ? t : -t);
    }
    return finish(std::move(r), K);
}

AsymptoticResult S0(unsigned n, const BigComplex& z_in, std::size_t K, const PrecisionConfig& cfg) {
    require_n(n);
    const Precision p = cfg.precision();
    const BigComplex z = z_in.with_precision(p);
    if (distance_to_unit_segment(z) < BigFloat(cfg.exclusion_eps, p)) {
        throw ExclusionBand(distance_to_unit_segment(z).to_double(), cfg.exclusion_eps);
    }
    const SaddleContext ctx = SaddleContext::make(z, 0);
    const CoefficientSet coeffs = expansion_coefficients(ctx, K + 1);
    const long nl = static_cast<long>(n);

    AsymptoticResult r;
    r.regime = Regime{z.re >= 1L ? RegimeKind::ComplexS0Only : RegimeKind::ComplexWithS1};
    // n!/sqrt(2 pi n) (z-1)^{n-1} / log h * h^{n z - 1/2}, principal branches
    const BigComplex exponent = z * nl - BigComplex(BigFloat(0.5, p));
    r.prefactor = (pow(z - 1L, nl - 1) / ctx.s * exp(exponent * ctx.s)) * (factorial(n, p) / sqrt_two_pi_n(n, p));
    r.terms = weighted_terms(n, coeffs, p);
    return finish(std::move(r), K);
}

AsymptoticResult S1(unsigned n, const BigComplex& z_in, std::size_t K, const PrecisionConfig& cfg, bool force) {
    require_n(n);
    const Precision p = cfg.precision();
    const BigComplex z = z_in.with_precision(p);
    const bool in_regime = z.re >= BigFloat(0.5, p) && z.re < 1L && z.im > 0L;
    if (!in_regime && !force) {
        throw RegimeViolation("S1 applies only for 1/2 <= Re z < 1, Im z > 0");
    }
    const SaddleContext ctx0 = SaddleContext::make(z, 0);
    const SaddleContext ctx1 = SaddleContext::make(z, 1);
    const CoefficientSet coeffs = expansion_coefficients(ctx1, K + 1);
    const long nl = static_cast<long>(n);

    AsymptoticResult r;
    r.regime = Regime{RegimeKind::ComplexWithS1};
    // -n!/sqrt(2 pi n) e^{-2 pi n i (1-z)} (z-1)^{n-1} / (log h + 2 pi i) h^{n z - 1/2}
    const BigComplex two_pi_i(BigFloat(0L, p), pi(p) * 2L);
    const BigComplex stokes_factor = exp(-(two_pi_i * nl) * (1L - z));
    const BigComplex exponent = z * nl - BigComplex(BigFloat(0.5, p));
    r.prefactor = -(stokes_factor * pow(z - 1L, nl - 1) / ctx1.s * exp(exponent * ctx0.s)) *
                  (factorial(n, p) / sqrt_two_pi_n(n, p));
    r.terms = weighted_terms(n, coeffs, p);
    if (!in_regime) {
        r.warnings.push_back("S1 evaluated outside its region of validity (forced)");
    }
    return finish(std::move(r), K);
}

Regime classify(const BigComplex& z_in, const PrecisionConfig& cfg) {
    const Precision p = cfg.precision();
    BigComplex z = z_in.with_precision(p);
    Regime regime;
    if (z.re * 2L < 1L) {
        z = 1L - z;
        regime.reflected = true;
    }
    if (z.im < 0L) {
        z = conj(z);
        regime.conjugated = true;
    }
    const BigFloat eps(cfg.exclusion_eps, p);
    if (z.im.is_zero()) {
        if (z.re * 2L == 1L) {
            regime.kind = RegimeKind::RealHalf;
        } else if (z.re > eps + 1L) {
            regime.kind = RegimeKind::RealGreaterOne;
        } else if (z.re < 1L - eps) {
            regime.kind = RegimeKind::RealUnitInterval;
        } else {
            throw ExclusionBand(abs(z.re - 1L).to_double(), cfg.exclusion_eps);
        }
        return regime;
    }
    const BigFloat distance = distance_to_unit_segment(z);
    if (distance < eps) {
        throw ExclusionBand(distance.to_double(), cfg.exclusion_eps);
    }
    if (abs(z.re - 1L) < BigFloat(cfg.stokes_eps, p)) {
        regime.kind = RegimeKind::StokesLine;
    } else if (z.re < 1L) {
        regime.kind = RegimeKind::ComplexWithS1;
    } else {
        regime.kind = RegimeKind::ComplexS0Only;
    }
    return regime;
}

AsymptoticResult dispatch(unsigned n, const BigComplex& z_in, std::size_t K, const PrecisionConfig& cfg) {
    const Precision p = cfg.precision();
    const Regime regime = classify(z_in, cfg);
    BigComplex z = z_in.with_precision(p);
    if (regime.reflected) {
        z = 1L - z;
    }
    if (regime.conjugated) {
        z = conj(z);
    }

    AsymptoticResult r;
    switch (regime.kind) {
    case RegimeKind::RealGreaterOne:
        r = theorem1(n, z.re, K, cfg);
        break;
    case RegimeKind::RealUnitInterval:
        r = theorem2(n, z.re, K, cfg);
        break;
    case RegimeKind::RealHalf:
        r = half_case(n, K, cfg);
        break;
    case RegimeKind::ComplexS0Only:
        r = S0(n, z, K, cfg);
        break;
    case RegimeKind::StokesLine:
        r = S0(n, z, K, cfg);
        r.warnings.push_back(
            "z lies on the Stokes line Re z = 1: only S0 is returned, the exponentially small contribution is not "
            "available there");
        break;
    case RegimeKind::ComplexWithS1: {
        r = S0(n, z, K, cfg);
        const AsymptoticResult sub = S1(n, z, K, cfg);
        r.subdominant = sub.value;
        r.value += sub.value;
        break;
    }
    }
    r.regime = regime;

    if (regime.conjugated) {
        r.value = conj(r.value);
        r.prefactor = conj(r.prefactor);
        for (BigComplex& t : r.terms) {
            t = conj(t);
        }
        if (r.subdominant) {
            r.subdominant = conj(*r.subdominant);
        }
    }
    if (regime.reflected && n % 2 == 1) {
        r.value = -r.value;
        r.prefactor = -r.prefactor;
        if (r.subdominant) {
            r.subdominant = -*r.subdominant;
        }
    }
    return r;
}

AsymptoticResult evaluate_forced(unsigned n, const BigComplex& z, std::size_t K, RegimeKind kind,
                                 const PrecisionConfig& cfg) {
    const bool real = z.im.is_zero();
    const auto require_real = [&] {
        if (!real) {
            throw RegimeViolation("regime " + to_string(kind) + " needs a real argument");
        }
    };
    AsymptoticResult r;
    switch (kind) {
    case RegimeKind::RealGreaterOne:
        require_real();
        r = theorem1(n, z.re, K, cfg);
        break;
    case RegimeKind::RealUnitInterval:
        require_real();
        r = theorem2(n, z.re, K, cfg);
        break;
    case RegimeKind::RealHalf:
        require_real();
        if (!(z.re * 2L == 1L)) {
            throw RegimeViolation("regime RealHalf needs z = 1/2");
        }
        r = half_case(n, K, cfg);
        break;
    case RegimeKind::ComplexS0Only:
    case RegimeKind::StokesLine:
        r = S0(n, z, K, cfg);
        break;
    case RegimeKind::ComplexWithS1: {
        r = S0(n, z, K, cfg);
        AsymptoticResult sub = S1(n, z, K, cfg, true);
        r.subdominant = sub.value;
        r.value += sub.value;
        r.warnings.insert(r.warnings.end(), sub.warnings.begin(), sub.warnings.end());
        break;
    }
    }
    r.regime = Regime{kind};
    r.warnings.push_back("regime forced to " + to_string(kind));
    return r;
}

RegimeKind parse_regime_kind(std::string_view name) {
    for (RegimeKind kind : {RegimeKind::RealGreaterOne, RegimeKind::RealUnitInterval, RegimeKind::RealHalf,
                            RegimeKind::ComplexWithS1, RegimeKind::ComplexS0Only, RegimeKind::StokesLine}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw std::invalid_argument("unknown regime '" + std::string(name) + "'");
}

namespace {

TruncationChoice smallest_term(const std::vector<BigComplex>& terms) {
    TruncationChoice choice;
    for (const BigComplex& t : terms) {
        choice.magnitudes.push_back(abs(t));
    }
    for (std::size_t k = 1; k < choice.magnitudes.size(); ++k) {
        if (choice.magnitudes[k] < choice.magnitudes[choice.k]) {
            choice.k = k;
        }
    }
    choice.minimum_found = choice.k + 1 < choice.magnitudes.size();
    return choice;
}

}  // namespace

TruncationChoice optimal_truncation(unsigned n, const BigComplex& z, std::size_t k_max, const PrecisionConfig& cfg) {
    if (k_max < 1) {
        throw std::invalid_argument("optimal_truncation needs k_max >= 1");
    }
    return smallest_term(dispatch(n, z, k_max, cfg).terms);
}

StokesProbe stokes_probe(unsigned n, const ComplexRational& z, const PrecisionConfig& cfg, bool force,
                         std::size_t k_max) {
    const Precision p = cfg.precision();
    const BigComplex zb = z.to_big(p);
    if (!force && !(zb.re >= BigFloat(0.5, p) && zb.re < 1L && zb.im > 0L)) {
        throw RegimeViolation("the Stokes probe needs 1/2 <= Re z < 1, Im z > 0 (or force)");
    }
    const AsymptoticResult dominant = S0(n, zb, k_max, cfg);
    const TruncationChoice choice = smallest_term(dominant.terms);
    const ComplexRational exact = eval_exact(n, z);

    StokesProbe probe;
    probe.optimal_k = choice.k;
    probe.exact_minus_S0 = exact.to_big(p.doubled()) - partial_sum(dominant, choice.k);
    probe.S1_value = S1(n, zb, 3, cfg, force).value;
    probe.ratio = abs(probe.S1_value) / abs(probe.exact_minus_S0);
    return probe;
}

BigFloat relative_error(const ComplexRational& exact, const BigComplex& approx) {
    const BigComplex e = exact.to_big(approx.precision().doubled());
    return abs(e - approx) / abs(e);
}

}  // namespace norlund
