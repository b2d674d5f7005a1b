#include "norlund/bigcomplex.hpp"

#include <algorithm>

namespace norlund {

BigComplex::BigComplex(BigFloat real) : re(std::move(real)), im(0L, re.precision()) {}

BigComplex::BigComplex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {
    const Precision p{std::max(re.precision().bits, im.precision().bits)};
    if (re.precision().bits != p.bits) {
        re = re.with_precision(p);
    }
    if (im.precision().bits != p.bits) {
        im = im.with_precision(p);
    }
}

Precision BigComplex::precision() const { return Precision{std::max(re.precision().bits, im.precision().bits)}; }

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) {
    BigFloat r = re * rhs.re - im * rhs.im;
    im = re * rhs.im + im * rhs.re;
    re = std::move(r);
    return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& rhs) {
    // Smith's algorithm keeps intermediate magnitudes bounded.
    if (abs(rhs.re) >= abs(rhs.im)) {
        const BigFloat ratio = rhs.im / rhs.re;
        const BigFloat denom = rhs.re + rhs.im * ratio;
        BigFloat r = (re + im * ratio) / denom;
        im = (im - re * ratio) / denom;
        re = std::move(r);
    } else {
        const BigFloat ratio = rhs.re / rhs.im;
        const BigFloat denom = rhs.re * ratio + rhs.im;
        BigFloat r = (re * ratio + im) / denom;
        im = (im * ratio - re) / denom;
        re = std::move(r);
    }
    return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& rhs) {
    re *= rhs;
    im *= rhs;
    return *this;
}

BigComplex& BigComplex::operator/=(const BigFloat& rhs) {
    re /= rhs;
    im /= rhs;
    return *this;
}

BigComplex& BigComplex::operator*=(long rhs) {
    re *= rhs;
    im *= rhs;
    return *this;
}

BigComplex& BigComplex::operator/=(long rhs) {
    re /= rhs;
    im /= rhs;
    return *this;
}

BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    BigComplex out(a);
    return out *= b;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigComplex out(a);
    return out /= b;
}

BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
BigComplex operator*(const BigFloat& a, BigComplex b) { return b *= a; }
BigComplex operator/(BigComplex a, const BigFloat& b) { return a /= b; }
BigComplex operator*(BigComplex a, long b) { return a *= b; }
BigComplex operator*(long a, BigComplex b) { return b *= a; }
BigComplex operator/(BigComplex a, long b) { return a /= b; }

BigComplex operator+(BigComplex a, long b) {
    a.re += b;
    return a;
}

BigComplex operator-(BigComplex a, long b) {
    a.re -= b;
    return a;
}

BigComplex operator-(long a, const BigComplex& b) { return {a - b.re, -b.im}; }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }

BigFloat arg(const BigComplex& z) {
    if (z.im.is_zero()) {
        const BigFloat zero(0L, z.precision());
        return atan2(zero, z.re);
    }
    return atan2(z.im, z.re);
}

BigComplex exp(const BigComplex& z) {
    const BigFloat modulus = exp(z.re);
    return {modulus * cos(z.im), modulus * sin(z.im)};
}

BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex sqrt(const BigComplex& z) {
    if (z.is_zero()) {
        return z;
    }
    // Stable half-angle form: t = sqrt((|z| + |re|)/2).
    const BigFloat t = sqrt((abs(z) + abs(z.re)) / 2L);
    if (z.re.sign() >= 0) {
        return {t, z.im / (2L * t)};
    }
    BigFloat imag = z.im.sign() < 0 ? -t : t;
    return {abs(z.im) / (2L * t), std::move(imag)};
}

BigComplex pow(const BigComplex& base, long exponent) {
    BigComplex result(1L, base.precision());
    BigComplex square = base;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    while (e != 0) {
        if ((e & 1UL) != 0) {
            result *= square;
        }
        e >>= 1;
        if (e != 0) {
            square *= square;
        }
    }
    if (exponent < 0) {
        return BigComplex(1L, base.precision()) / result;
    }
    return result;
}

BigComplex pow(const BigComplex& base, const BigComplex& exponent) { return exp(exponent * log(base)); }

std::string to_string(const BigComplex& z, int significant) {
    std::string imag = z.im.to_scientific(significant);
    if (imag.front() != '-') {
        imag.insert(imag.begin(), '+');
    }
    return z.re.to_scientific(significant) + imag + "i";
}

}  // namespace norlund
