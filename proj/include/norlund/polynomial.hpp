#ifndef NORLUND_POLYNOMIAL_HPP
#define NORLUND_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace norlund {

/// Dense polynomial sum_k c_k z^k.  Trailing zero coefficients are trimmed,
/// so the leading coefficient is nonzero unless the polynomial is zero, in
/// which case it holds the single coefficient 0.
template <typename Scalar>
class Polynomial {
public:
    Polynomial() : coeffs_{Scalar(0)} {}
    explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

    std::size_t degree() const { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    /// Horner evaluation at any argument type that supports `acc * z + c`.
    template <typename Arg>
    Arg operator()(const Arg& z, Arg zero) const {
        Arg acc = std::move(zero);
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc = acc * z;
            acc += coeffs_[k];
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
            c[k] += a.coeffs_[k];
        }
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
            c[k] -= b.coeffs_[k];
        }
        return Polynomial(std::move(c));
    }

private:
    void trim() {
        while (coeffs_.size() > 1 && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
        if (coeffs_.empty()) {
            coeffs_.push_back(Scalar(0));
        }
    }

    std::vector<Scalar> coeffs_;
};

}  // namespace norlund

#endif  // NORLUND_POLYNOMIAL_HPP
