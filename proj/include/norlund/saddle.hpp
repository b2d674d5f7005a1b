#ifndef NORLUND_SADDLE_HPP
#define NORLUND_SADDLE_HPP

#include "norlund/bigcomplex.hpp"
#include "norlund/series.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace norlund {

/// Numerical knobs shared by the extended-precision modules.
struct PrecisionConfig {
    int digits = 60;              ///< working decimal precision (>= 30)
    double exclusion_eps = 0.05;  ///< refuse z closer than this to [0,1]
    double stokes_eps = 1e-9;     ///< |Re z - 1| below this flags the Stokes line

    Precision precision() const { return Precision::digits(digits); }
    /// Series order used to generate A_0..A_K.
    static std::size_t series_order(std::size_t K) { return 2 * K + 8; }
};

/// A saddle s_k = log(z/(z-1)) + 2 pi i k of psi(s) = log(e^s - 1) - s z.
struct SaddleContext {
    BigComplex z;
    BigComplex h;  ///< z/(z-1) = e^{s_k}
    int k_index = 0;
    BigComplex s;
    /// Polar form of the saddle for real 0 < x < 1, where h < 0 and
    /// s_{-1} = log|h| - pi i = L e^{-i omega}; empty otherwise.
    std::optional<BigFloat> L;
    std::optional<BigFloat> omega;

    /// Builds the context at the precision of `z`.  Throws PoleArgument for z in {0, 1}.
    static SaddleContext make(const BigComplex& z, int k);
};

/// Principal log of z/(z-1) plus 2 pi i k.
BigComplex saddle_point(const BigComplex& z, int k);

/// psi(s) = log(e^s - 1) - s z with the principal logarithm.
BigComplex phase(const BigComplex& s, const BigComplex& z);

/// psi(s_k + u) - psi(s_k) in powers of u, to the given order.
ComplexSeries phase_series(const SaddleContext& ctx, std::size_t order);

/// Normalised even-order coefficients of (1/s) ds/dw at a saddle, where
/// psi(s) - psi(s_k) = w^2/2.
struct CoefficientSet {
    std::vector<BigComplex> values;  ///< A_0..A_K, A_0 = 1
    BigComplex g0;                   ///< leading coefficient of (1/s) ds/dw
    SaddleContext saddle;
};

/// Coefficient engine for arbitrary K.  With `verify_branch` the opposite
/// square-root branch is also run and the two coefficient lists must agree.
CoefficientSet expansion_coefficients(const SaddleContext& ctx, std::size_t K, bool verify_branch = false);

/// Literal closed forms of A_1, A_2, A_3 as functions of h and lambda.
BigComplex closed_form_A(const BigComplex& h, const BigComplex& lambda, int k);

/// Literal closed forms of the midpoint coefficients C_0..C_5.
BigFloat closed_form_C(int k, Precision p);

}  // namespace norlund

#endif  // NORLUND_SADDLE_HPP
