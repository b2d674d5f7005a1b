#ifndef NORLUND_BIGFLOAT_HPP
#define NORLUND_BIGFLOAT_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace norlund {

/// Working precision of an extended-precision value, stored in bits.
/// Every BigFloat carries its own precision; there is no process-wide default.
struct Precision {
    mpfr_prec_t bits = 64;

    static Precision digits(int decimal_digits);
    static Precision from_bits(mpfr_prec_t b) { return Precision{b}; }
    int decimal_digits() const;
    Precision doubled() const { return Precision{2 * bits}; }

    friend bool operator==(Precision, Precision) = default;
};

/// Extended-precision real number (MPFR, round-to-nearest).
///
/// Binary operations between two BigFloats produce a result at the larger of
/// the two precisions; operations with a built-in integer keep the precision
/// of the BigFloat operand.  A default-constructed value is zero at 64 bits.
class BigFloat {
public:
    BigFloat();
    BigFloat(long v, Precision p);
    BigFloat(double v, Precision p);
    BigFloat(const mpz_class& v, Precision p);
    BigFloat(const mpq_class& v, Precision p);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    /// Parses a decimal literal such as "-1.25e-3".  Throws std::invalid_argument.
    static BigFloat parse(std::string_view text, Precision p);

    Precision precision() const { return Precision{mpfr_get_prec(value_)}; }
    /// Copy rounded to a different precision.
    BigFloat with_precision(Precision p) const;

    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_nan() const { return mpfr_nan_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    long exponent10() const;

    /// Scientific rendering with `significant` digits, e.g. "-1.0029378942e-01".
    std::string to_scientific(int significant) const;
    /// Fixed rendering with `decimals` digits after the point.
    std::string to_fixed(int decimals) const;

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);
    BigFloat& operator+=(long rhs);
    BigFloat& operator-=(long rhs);
    BigFloat& operator*=(long rhs);
    BigFloat& operator/=(long rhs);

    BigFloat operator-() const;

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
    friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, long b);

private:
    explicit BigFloat(mpfr_prec_t bits);
    void ensure_precision(mpfr_prec_t bits);

    mpfr_t value_;
};

BigFloat operator+(BigFloat a, const BigFloat& b);
BigFloat operator-(BigFloat a, const BigFloat& b);
BigFloat operator*(BigFloat a, const BigFloat& b);
BigFloat operator/(BigFloat a, const BigFloat& b);
BigFloat operator+(BigFloat a, long b);
BigFloat operator-(BigFloat a, long b);
BigFloat operator*(BigFloat a, long b);
BigFloat operator/(BigFloat a, long b);
BigFloat operator*(long a, BigFloat b);
BigFloat operator-(long a, const BigFloat& b);
BigFloat operator/(long a, const BigFloat& b);

BigFloat pi(Precision p);
BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& base, long exponent);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
/// 10^e at the given precision.
BigFloat pow10(long e, Precision p);

/// Exact n! converted to the given precision.
BigFloat factorial(unsigned long n, Precision p);

}  // namespace norlund

#endif  // NORLUND_BIGFLOAT_HPP
