#include "norlund/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace norlund {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

std::partial_ordering order_from_cmp(int c, bool unordered) {
    if (unordered) {
        return std::partial_ordering::unordered;
    }
    if (c < 0) {
        return std::partial_ordering::less;
    }
    if (c > 0) {
        return std::partial_ordering::greater;
    }
    return std::partial_ordering::equivalent;
}

std::string take_mpfr_string(char* raw) {
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
}

}  // namespace

Precision Precision::digits(int decimal_digits) {
    if (decimal_digits < 1) {
        throw std::invalid_argument("precision must be at least one decimal digit");
    }
    return Precision{static_cast<mpfr_prec_t>(std::ceil(decimal_digits * kLog2Of10)) + 4};
}

int Precision::decimal_digits() const {
    return static_cast<int>(std::floor(static_cast<double>(bits - 4) / kLog2Of10));
}

BigFloat::BigFloat() : BigFloat(mpfr_prec_t{64}) { mpfr_set_zero(value_, 1); }

BigFloat::BigFloat(mpfr_prec_t bits) { mpfr_init2(value_, bits); }

BigFloat::BigFloat(long v, Precision p) : BigFloat(p.bits) { mpfr_set_si(value_, v, MPFR_RNDN); }

BigFloat::BigFloat(double v, Precision p) : BigFloat(p.bits) { mpfr_set_d(value_, v, MPFR_RNDN); }

BigFloat::BigFloat(const mpz_class& v, Precision p) : BigFloat(p.bits) {
    mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& v, Precision p) : BigFloat(p.bits) {
    mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) : BigFloat(mpfr_get_prec(other.value_)) {
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : BigFloat(mpfr_get_prec(other.value_)) {
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::parse(std::string_view text, Precision p) {
    BigFloat out(p.bits);
    std::string buffer(text);
    char* end = nullptr;
    if (!buffer.empty()) {
        mpfr_strtofr(out.value_, buffer.c_str(), &end, 10, MPFR_RNDN);
    }
    if (buffer.empty() || end != buffer.c_str() + buffer.size()) {
        throw std::invalid_argument("not a decimal number: '" + buffer + "'");
    }
    return out;
}

BigFloat BigFloat::with_precision(Precision p) const {
    BigFloat out(p.bits);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

void BigFloat::ensure_precision(mpfr_prec_t bits) {
    if (bits > mpfr_get_prec(value_)) {
        mpfr_prec_round(value_, bits, MPFR_RNDN);
    }
}

long BigFloat::exponent10() const {
    if (is_zero()) {
        return 0;
    }
    BigFloat a = abs(*this);
    mpfr_log10(a.value_, a.value_, MPFR_RNDN);
    mpfr_floor(a.value_, a.value_);
    return mpfr_get_si(a.value_, MPFR_RNDN);
}

std::string BigFloat::to_scientific(int significant) const {
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Re", std::max(significant - 1, 0), value_);
    return take_mpfr_string(raw);
}

std::string BigFloat::to_fixed(int decimals) const {
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rf", std::max(decimals, 0), value_);
    return take_mpfr_string(raw);
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    ensure_precision(mpfr_get_prec(rhs.value_));
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    ensure_precision(mpfr_get_prec(rhs.value_));
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    ensure_precision(mpfr_get_prec(rhs.value_));
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    ensure_precision(mpfr_get_prec(rhs.value_));
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator+=(long rhs) {
    mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(long rhs) {
    mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
    mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
    mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(*this);
    mpfr_neg(out.value_, out.value_, MPFR_RNDN);
    return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    return order_from_cmp(mpfr_cmp(a.value_, b.value_), a.is_nan() || b.is_nan());
}

std::partial_ordering operator<=>(const BigFloat& a, long b) {
    return order_from_cmp(mpfr_cmp_si(a.value_, b), a.is_nan());
}

BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
BigFloat operator+(BigFloat a, long b) { return a += b; }
BigFloat operator-(BigFloat a, long b) { return a -= b; }
BigFloat operator*(BigFloat a, long b) { return a *= b; }
BigFloat operator/(BigFloat a, long b) { return a /= b; }
BigFloat operator*(long a, BigFloat b) { return b *= a; }

BigFloat operator-(long a, const BigFloat& b) {
    BigFloat out(b);
    mpfr_si_sub(out.get(), a, b.get(), MPFR_RNDN);
    return out;
}

BigFloat operator/(long a, const BigFloat& b) {
    BigFloat out(b);
    mpfr_si_div(out.get(), a, b.get(), MPFR_RNDN);
    return out;
}

// Unary helpers share one shape: result at the argument's precision.
#define NORLUND_UNARY(name, fn)                  \
    BigFloat name(const BigFloat& x) {           \
        BigFloat out(x);                         \
        fn(out.get(), x.get(), MPFR_RNDN);       \
        return out;                              \
    }

NORLUND_UNARY(abs, mpfr_abs)
NORLUND_UNARY(sqrt, mpfr_sqrt)
NORLUND_UNARY(exp, mpfr_exp)
NORLUND_UNARY(log, mpfr_log)
NORLUND_UNARY(sin, mpfr_sin)
NORLUND_UNARY(cos, mpfr_cos)
NORLUND_UNARY(atan, mpfr_atan)

#undef NORLUND_UNARY

BigFloat pi(Precision p) {
    BigFloat out(0L, p);
    mpfr_const_pi(out.get(), MPFR_RNDN);
    return out;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat out = y.precision().bits >= x.precision().bits ? y : x;
    mpfr_atan2(out.get(), y.get(), x.get(), MPFR_RNDN);
    return out;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat out = y.precision().bits >= x.precision().bits ? y : x;
    mpfr_hypot(out.get(), x.get(), y.get(), MPFR_RNDN);
    return out;
}

BigFloat pow(const BigFloat& base, long exponent) {
    BigFloat out(base);
    mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
    return out;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
    BigFloat out = base.precision().bits >= exponent.precision().bits ? base : exponent;
    mpfr_pow(out.get(), base.get(), exponent.get(), MPFR_RNDN);
    return out;
}

BigFloat pow10(long e, Precision p) {
    BigFloat out(10L, p);
    mpfr_pow_si(out.get(), out.get(), e, MPFR_RNDN);
    return out;
}

BigFloat factorial(unsigned long n, Precision p) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return BigFloat(f, p);
}

}  // namespace norlund
