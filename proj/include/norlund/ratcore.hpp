#ifndef NORLUND_RATCORE_HPP
#define NORLUND_RATCORE_HPP

// Exact reference track: generalized Bernoulli polynomials B_n^(n)(z) and
// Bernoulli polynomials of the second kind b_n(z) in big-rational arithmetic.
// Nothing here rounds.

#include "norlund/bigcomplex.hpp"
#include "norlund/polynomial.hpp"
#include "norlund/series.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace norlund {

/// Arbitrary-size rational, always in lowest terms with positive denominator.
using Rational = mpq_class;
using RationalPolynomial = Polynomial<Rational>;

/// Exact complex rational re + i im.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational real) : re(std::move(real)), im(0) {}
    ComplexRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    ComplexRational& operator+=(const ComplexRational& rhs);
    ComplexRational& operator-=(const ComplexRational& rhs);
    ComplexRational& operator*=(const ComplexRational& rhs);
    ComplexRational operator-() const { return {-re, -im}; }

    friend bool operator==(const ComplexRational&, const ComplexRational&) = default;

    BigComplex to_big(Precision p) const { return BigComplex(re, im, p); }
};

ComplexRational operator+(ComplexRational a, const ComplexRational& b);
ComplexRational operator-(ComplexRational a, const ComplexRational& b);
ComplexRational operator*(const ComplexRational& a, const ComplexRational& b);
ComplexRational conj(const ComplexRational& z);

/// Parses "p", "p/q" or a finite decimal such as "0.75" into a reduced rational.
/// Throws ParseError carrying the offending offset.
Rational parse_rational(std::string_view text);
/// Parses "re[,im]" with each part accepted by parse_rational.
ComplexRational parse_complex_rational(std::string_view text);

/// Decimal rendering of an exact rational with `significant` digits.
std::string to_decimal(const Rational& q, int significant);

/// Truncated series of t/(e^t - 1); coefficient k is B_k/k!.
RationalSeries base_series(std::size_t order);

/// B_n^(n)(z) = n! [t^n] (t/(e^t-1))^n e^{zt}.
RationalPolynomial norlund_polynomial(unsigned n);

/// b_n(z) from its own generating function t(1+t)^z / log(1+t).
RationalPolynomial second_kind_polynomial(unsigned n);

/// p(z + c) as a polynomial in z.
RationalPolynomial shift_argument(const RationalPolynomial& p, const Rational& c);

ComplexRational evaluate(const RationalPolynomial& p, const ComplexRational& z);

/// Exact B_n^(n)(n z); the argument is scaled by n here.
ComplexRational eval_exact(unsigned n, const ComplexRational& z);
/// Same, reusing an already computed B_n^(n).
ComplexRational eval_exact(const RationalPolynomial& norlund, unsigned n, const ComplexRational& z);

/// B_n^(n)(n z) == (-1)^n B_n^(n)(n (1 - z)), checked exactly.
bool reflection_check(unsigned n, const ComplexRational& z);

struct InterlacingReport {
    unsigned n = 0;
    std::vector<Rational> values;  ///< B_n^(n)(x) at x = 0..n
    std::vector<int> signs;        ///< sign of each value
    bool passed = false;
    /// First integer pair (x, x+1) without a strict sign change.
    std::optional<std::pair<unsigned, unsigned>> offending;
};

/// Sign pattern of the unscaled B_n^(n)(x) at x = 0..n; passes iff signs
/// strictly alternate (one simple zero in every gap between consecutive integers).
InterlacingReport interlacing_check(unsigned n);

}  // namespace norlund

#endif  // NORLUND_RATCORE_HPP
