#ifndef NORLUND_BIGCOMPLEX_HPP
#define NORLUND_BIGCOMPLEX_HPP

#include "norlund/bigfloat.hpp"

#include <complex>
#include <string>

namespace norlund {

/// Extended-precision complex number.  Both parts carry the same precision.
struct BigComplex {
    BigFloat re;
    BigFloat im;

    BigComplex() = default;
    BigComplex(BigFloat real);
    BigComplex(BigFloat real, BigFloat imag);
    BigComplex(long real, Precision p) : re(real, p), im(0L, p) {}
    BigComplex(const mpq_class& real, const mpq_class& imag, Precision p) : re(real, p), im(imag, p) {}

    static BigComplex i(Precision p) { return {BigFloat(0L, p), BigFloat(1L, p)}; }

    Precision precision() const;
    BigComplex with_precision(Precision p) const { return {re.with_precision(p), im.with_precision(p)}; }
    std::complex<double> to_complex_double() const { return {re.to_double(), im.to_double()}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex& operator+=(const BigComplex& rhs);
    BigComplex& operator-=(const BigComplex& rhs);
    BigComplex& operator*=(const BigComplex& rhs);
    BigComplex& operator/=(const BigComplex& rhs);
    BigComplex& operator*=(const BigFloat& rhs);
    BigComplex& operator/=(const BigFloat& rhs);
    BigComplex& operator*=(long rhs);
    BigComplex& operator/=(long rhs);

    BigComplex operator-() const { return {-re, -im}; }
};

BigComplex operator+(BigComplex a, const BigComplex& b);
BigComplex operator-(BigComplex a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator*(BigComplex a, const BigFloat& b);
BigComplex operator*(const BigFloat& a, BigComplex b);
BigComplex operator/(BigComplex a, const BigFloat& b);
BigComplex operator*(BigComplex a, long b);
BigComplex operator*(long a, BigComplex b);
BigComplex operator/(BigComplex a, long b);
BigComplex operator+(BigComplex a, long b);
BigComplex operator-(BigComplex a, long b);
BigComplex operator-(long a, const BigComplex& b);

BigComplex conj(const BigComplex& z);
BigFloat abs(const BigComplex& z);
/// Principal argument in (-pi, pi]; a signed-zero imaginary part on the
/// negative real axis maps to +pi.
BigFloat arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal logarithm.
BigComplex log(const BigComplex& z);
/// Principal square root (Re >= 0).
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& base, long exponent);
/// Principal power exp(exponent * log(base)).
BigComplex pow(const BigComplex& base, const BigComplex& exponent);

/// "re+imi" with each part in scientific notation.
std::string to_string(const BigComplex& z, int significant);

}  // namespace norlund

#endif  // NORLUND_BIGCOMPLEX_HPP
