#ifndef NORLUND_SERIES_HPP
#define NORLUND_SERIES_HPP

#include "norlund/bigcomplex.hpp"
#include "norlund/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace norlund {

/// Per-scalar hooks the series algebra needs beyond ring arithmetic.
template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<mpq_class> {
    static mpq_class zero_like(const mpq_class&) { return 0; }
    static mpq_class one_like(const mpq_class&) { return 1; }
    static bool negligible(const mpq_class& x) { return x == 0; }
};

template <>
struct ScalarTraits<BigComplex> {
    static BigComplex zero_like(const BigComplex& x) { return BigComplex(0L, x.precision()); }
    static BigComplex one_like(const BigComplex& x) { return BigComplex(1L, x.precision()); }
    /// Below 2^-(bits-8): indistinguishable from rounding noise at this precision.
    static bool negligible(const BigComplex& x) {
        if (x.is_zero()) {
            return true;
        }
        const long bits = static_cast<long>(x.precision().bits);
        return mpfr_get_exp(abs(x).get()) < -(bits - 8);
    }
};

/// Truncated power series sum_{k < order} c_k t^k.  The length of the
/// coefficient vector is the truncation order; arithmetic never reads
/// beyond it and results carry the smaller order of their inputs.
template <typename Scalar>
class Series {
public:
    using value_type = Scalar;

    Series() = default;
    Series(std::size_t order, const Scalar& zero) : coeffs_(order, zero) {}
    explicit Series(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}
    Series(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) {}

    std::size_t order() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }

    const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
    Scalar& operator[](std::size_t k) { return coeffs_[k]; }

    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    Scalar zero() const { return ScalarTraits<Scalar>::zero_like(coeffs_.front()); }
    Scalar one() const { return ScalarTraits<Scalar>::one_like(coeffs_.front()); }

    Series truncated(std::size_t order) const {
        std::vector<Scalar> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, coeffs_.size())));
        return Series(std::move(c));
    }

private:
    std::vector<Scalar> coeffs_;
};

using RationalSeries = Series<mpq_class>;
using ComplexSeries = Series<BigComplex>;

/// Constant series c + 0 t + ... of the given order.
template <typename Scalar>
Series<Scalar> constant_series(const Scalar& c, std::size_t order) {
    Series<Scalar> out(order, ScalarTraits<Scalar>::zero_like(c));
    if (order > 0) {
        out[0] = c;
    }
    return out;
}

/// The series t (identity) of the given order.
template <typename Scalar>
Series<Scalar> identity_series(const Scalar& prototype, std::size_t order) {
    Series<Scalar> out(order, ScalarTraits<Scalar>::zero_like(prototype));
    if (order > 1) {
        out[1] = ScalarTraits<Scalar>::one_like(prototype);
    }
    return out;
}

template <typename Scalar>
Series<Scalar> operator+(const Series<Scalar>& a, const Series<Scalar>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series<Scalar> out = a.truncated(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] += b[k];
    }
    return out;
}

template <typename Scalar>
Series<Scalar> operator-(const Series<Scalar>& a, const Series<Scalar>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series<Scalar> out = a.truncated(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] -= b[k];
    }
    return out;
}

template <typename Scalar>
Series<Scalar> operator-(const Series<Scalar>& a) {
    Series<Scalar> out = a;
    for (std::size_t k = 0; k < out.order(); ++k) {
        out[k] = -out[k];
    }
    return out;
}

template <typename Scalar, typename Factor>
Series<Scalar> scale(const Series<Scalar>& a, const Factor& c) {
    Series<Scalar> out = a;
    for (std::size_t k = 0; k < out.order(); ++k) {
        out[k] *= c;
    }
    return out;
}

/// Truncated Cauchy product.
template <typename Scalar>
Series<Scalar> operator*(const Series<Scalar>& a, const Series<Scalar>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    if (n == 0) {
        return Series<Scalar>();
    }
    Series<Scalar> out(n, a.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// Truncated quotient a/b; b must have a non-negligible constant term.
template <typename Scalar>
Series<Scalar> div(const Series<Scalar>& a, const Series<Scalar>& b) {
    const std::size_t n = std::min(a.order(), b.order());
    if (n == 0) {
        return Series<Scalar>();
    }
    if (ScalarTraits<Scalar>::negligible(b[0])) {
        throw ZeroConstantTerm();
    }
    Series<Scalar> q(n, a.zero());
    for (std::size_t k = 0; k < n; ++k) {
        Scalar acc = a[k];
        for (std::size_t j = 1; j <= k; ++j) {
            acc -= b[j] * q[k - j];
        }
        q[k] = acc / b[0];
    }
    return q;
}

/// Power by binary exponentiation, truncating after every multiply.
template <typename Scalar>
Series<Scalar> pow(const Series<Scalar>& base, unsigned long exponent) {
    Series<Scalar> result = constant_series(base.one(), base.order());
    Series<Scalar> square = base;
    while (exponent != 0) {
        if ((exponent & 1UL) != 0) {
            result = result * square;
        }
        exponent >>= 1;
        if (exponent != 0) {
            square = square * square;
        }
    }
    return result;
}

/// Formal derivative; the result has order one less than the input.
template <typename Scalar>
Series<Scalar> derivative(const Series<Scalar>& a) {
    if (a.order() <= 1) {
        return Series<Scalar>();
    }
    Series<Scalar> out(a.order() - 1, a.zero());
    for (std::size_t k = 1; k < a.order(); ++k) {
        out[k - 1] = a[k] * static_cast<long>(k);
    }
    return out;
}

/// Divides by t^shift, dropping the first `shift` coefficients.
template <typename Scalar>
Series<Scalar> shift_down(const Series<Scalar>& a, std::size_t shift) {
    if (shift >= a.order()) {
        return Series<Scalar>();
    }
    return Series<Scalar>(std::vector<Scalar>(a.coefficients().begin() + static_cast<std::ptrdiff_t>(shift), a.coefficients().end()));
}

/// Composition f(g(t)); g must have a zero constant term.
template <typename Scalar>
Series<Scalar> compose(const Series<Scalar>& f, const Series<Scalar>& g) {
    if (g.order() == 0 || f.order() == 0) {
        return Series<Scalar>();
    }
    if (!ScalarTraits<Scalar>::negligible(g[0])) {
        throw NonzeroConstantTerm();
    }
    const std::size_t n = std::min(f.order(), g.order());
    Series<Scalar> inner = g.truncated(n);
    inner[0] = inner.zero();
    // Horner: f0 + g (f1 + g (f2 + ...)).
    Series<Scalar> acc = constant_series(f[n - 1], n);
    for (std::size_t k = n - 1; k-- > 0;) {
        acc = acc * inner;
        acc[0] += f[k];
    }
    return acc;
}

/// log(1 + x) for x with zero constant term: sum_{m>=1} (-1)^{m-1} x^m / m.
template <typename Scalar>
Series<Scalar> log1p_compose(const Series<Scalar>& x) {
    if (x.order() == 0) {
        return x;
    }
    if (!ScalarTraits<Scalar>::negligible(x[0])) {
        throw NonzeroConstantTerm();
    }
    const std::size_t n = x.order();
    Series<Scalar> log1p_coeffs(n, x.zero());
    for (std::size_t m = 1; m < n; ++m) {
        Scalar c = x.one();
        c /= static_cast<long>(m);
        log1p_coeffs[m] = (m % 2 == 1) ? c : Scalar(-c);
    }
    return compose(log1p_coeffs, x);
}

/// Compositional inverse u(w) of w(u), where w has zero constant and
/// non-negligible linear term.  Newton iteration on u <- u - (w(u) - t)/w'(u);
/// each sweep doubles the number of correct coefficients.
template <typename Scalar>
Series<Scalar> revert(const Series<Scalar>& w) {
    const std::size_t n = w.order();
    if (n < 2) {
        throw ZeroLinearTerm();
    }
    if (!ScalarTraits<Scalar>::negligible(w[0])) {
        throw NonzeroConstantTerm();
    }
    if (ScalarTraits<Scalar>::negligible(w[1])) {
        throw ZeroLinearTerm();
    }
    const Series<Scalar> t = identity_series(w[1], n);
    // w' padded back to order n; the missing top coefficient never reaches
    // the quotient because the residual vanishes through order 1.
    std::vector<Scalar> dw_coeffs = derivative(w).coefficients();
    dw_coeffs.push_back(w.zero());
    const Series<Scalar> dw(std::move(dw_coeffs));
    Series<Scalar> u(n, w.zero());
    u[1] = w.one() / w[1];
    for (std::size_t correct = 2; correct < n; correct *= 2) {
        const Series<Scalar> residual = compose(w, u) - t;
        u = u - div(residual, compose(dw, u));
        u[0] = u.zero();
    }
    return u;
}

/// Square root with constant term chosen as the root of a_0 nearer to
/// `branch_target`.
Series<BigComplex> sqrt_series(const Series<BigComplex>& a, const BigComplex& branch_target);

}  // namespace norlund

#endif  // NORLUND_SERIES_HPP
