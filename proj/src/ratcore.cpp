#include "norlund/ratcore.hpp"

#include "norlund/errors.hpp"

#include <cctype>

namespace norlund {

ComplexRational& ComplexRational::operator+=(const ComplexRational& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& rhs) {
    Rational r = re * rhs.re - im * rhs.im;
    im = re * rhs.im + im * rhs.re;
    re = std::move(r);
    return *this;
}

ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }

ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    ComplexRational out(a);
    return out *= b;
}

ComplexRational conj(const ComplexRational& z) { return {z.re, -z.im}; }

namespace {

Rational ratio(const mpz_class& num, const mpz_class& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::size_t scan_digits(std::string_view text, std::size_t pos) {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
        ++pos;
    }
    return pos;
}

Rational parse_rational_at(std::string_view text, std::size_t offset) {
    if (text.empty()) {
        throw ParseError("empty number", offset);
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t int_start = pos;
    pos = scan_digits(text, pos);
    std::string digits(text.substr(int_start, pos - int_start));
    mpz_class denominator = 1;
    if (pos < text.size() && text[pos] == '.') {
        const std::size_t frac_start = ++pos;
        pos = scan_digits(text, pos);
        digits += std::string(text.substr(frac_start, pos - frac_start));
        mpz_ui_pow_ui(denominator.get_mpz_t(), 10, pos - frac_start);
    } else if (pos < text.size() && text[pos] == '/') {
        const std::size_t den_start = ++pos;
        pos = scan_digits(text, pos);
        if (pos == den_start) {
            throw ParseError("expected denominator digits", offset + pos);
        }
        denominator = mpz_class(std::string(text.substr(den_start, pos - den_start)), 10);
        if (denominator == 0) {
            throw ParseError("zero denominator", offset + den_start);
        }
    }
    if (digits.empty()) {
        throw ParseError("expected digits", offset + int_start);
    }
    if (pos != text.size()) {
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", offset + pos);
    }
    const Rational q = ratio(mpz_class(digits, 10), denominator);
    return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) { return parse_rational_at(text, 0); }

ComplexRational parse_complex_rational(std::string_view text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos) {
        return ComplexRational(parse_rational_at(text, 0));
    }
    return ComplexRational(parse_rational_at(text.substr(0, comma), 0),
                           parse_rational_at(text.substr(comma + 1), comma + 1));
}

std::string to_decimal(const Rational& q, int significant) {
    return BigFloat(q, Precision::digits(significant + 10)).to_scientific(significant);
}

RationalSeries base_series(std::size_t order) {
    // (e^t - 1)/t = sum_k t^k/(k+1)!
    RationalSeries denominator(order, Rational(0));
    mpz_class fact = 1;
    for (std::size_t k = 0; k < order; ++k) {
        fact *= static_cast<unsigned long>(k + 1);
        denominator[k] = Rational(1, fact);
    }
    return div(constant_series(Rational(1), order), denominator);
}

RationalPolynomial norlund_polynomial(unsigned n) {
    const RationalSeries power = pow(base_series(n + 1), n);
    // n! sum_m a_m z^{n-m}/(n-m)!
    mpz_class n_fact;
    mpz_fac_ui(n_fact.get_mpz_t(), n);
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (unsigned m = 0; m <= n; ++m) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n - m);
        coeffs[n - m] = power[m] * ratio(n_fact, f);
    }
    return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial second_kind_polynomial(unsigned n) {
    // t / log(1+t) = 1 / sum_k (-1)^k t^k/(k+1)
    const std::size_t order = n + 1;
    RationalSeries log_over_t(order, Rational(0));
    for (std::size_t k = 0; k < order; ++k) {
        log_over_t[k] = Rational(k % 2 == 0 ? 1 : -1, static_cast<unsigned long>(k + 1));
    }
    const RationalSeries c = div(constant_series(Rational(1), order), log_over_t);

    // (1+t)^z = sum_j binom(z, j) t^j with binom(z, j) = z(z-1)...(z-j+1)/j!
    std::vector<Rational> result(n + 1, Rational(0));
    std::vector<Rational> falling{Rational(1)};
    mpz_class j_fact = 1;
    for (unsigned j = 0; j <= n; ++j) {
        if (j > 0) {
            j_fact *= j;
            // falling <- falling * (z - (j-1))
            std::vector<Rational> next(falling.size() + 1, Rational(0));
            for (std::size_t k = 0; k < falling.size(); ++k) {
                next[k + 1] += falling[k];
                next[k] -= falling[k] * static_cast<long>(j - 1);
            }
            falling = std::move(next);
        }
        const Rational weight = c[n - j] / Rational(j_fact);
        for (std::size_t k = 0; k < falling.size(); ++k) {
            result[k] += weight * falling[k];
        }
    }
    mpz_class n_fact;
    mpz_fac_ui(n_fact.get_mpz_t(), n);
    for (auto& r : result) {
        r *= Rational(n_fact);
    }
    return RationalPolynomial(std::move(result));
}

RationalPolynomial shift_argument(const RationalPolynomial& p, const Rational& c) {
    // Horner in polynomial arithmetic: acc <- acc * (z + c) + p_k
    std::vector<Rational> acc{Rational(0)};
    for (std::size_t k = p.degree() + 1; k-- > 0;) {
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] += acc[i] * c;
        }
        next[0] += p[k];
        acc = std::move(next);
    }
    return RationalPolynomial(std::move(acc));
}

ComplexRational evaluate(const RationalPolynomial& p, const ComplexRational& z) { return p(z, ComplexRational()); }

ComplexRational eval_exact(const RationalPolynomial& norlund, unsigned n, const ComplexRational& z) {
    return evaluate(norlund, ComplexRational(Rational(n)) * z);
}

ComplexRational eval_exact(unsigned n, const ComplexRational& z) { return eval_exact(norlund_polynomial(n), n, z); }

bool reflection_check(unsigned n, const ComplexRational& z) {
    const RationalPolynomial p = norlund_polynomial(n);
    const ComplexRational lhs = eval_exact(p, n, z);
    ComplexRational rhs = eval_exact(p, n, ComplexRational(Rational(1)) - z);
    if (n % 2 == 1) {
        rhs = -rhs;
    }
    return lhs == rhs;
}

InterlacingReport interlacing_check(unsigned n) {
    InterlacingReport report;
    report.n = n;
    const RationalPolynomial p = norlund_polynomial(n);
    for (unsigned x = 0; x <= n; ++x) {
        Rational v = evaluate(p, ComplexRational(Rational(x))).re;
        report.signs.push_back(sgn(v));
        report.values.push_back(std::move(v));
    }
    for (unsigned x = 0; x < n; ++x) {
        if (report.signs[x] == 0 || report.signs[x] != -report.signs[x + 1]) {
            report.offending = std::make_pair(x, x + 1);
            break;
        }
    }
    report.passed = n >= 1 && !report.offending;
    return report;
}

}  // namespace norlund
