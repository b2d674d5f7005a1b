#include "norlund/series.hpp"

namespace norlund {

Series<BigComplex> sqrt_series(const Series<BigComplex>& a, const BigComplex& branch_target) {
    const std::size_t n = a.order();
    if (n == 0) {
        return a;
    }
    if (ScalarTraits<BigComplex>::negligible(a[0])) {
        throw ZeroConstantTerm();
    }
    BigComplex root = sqrt(a[0]);
    const BigFloat d_plus = abs(root - branch_target);
    const BigFloat d_minus = abs(root + branch_target);
    const BigFloat gap = abs(d_plus - d_minus);
    // Equidistant to within rounding noise: no preferred root.
    if (ScalarTraits<BigComplex>::negligible(BigComplex(gap / (d_plus + d_minus + BigFloat(1L, gap.precision()))))) {
        throw AmbiguousBranch();
    }
    if (d_minus < d_plus) {
        root = -root;
    }
    Series<BigComplex> s(n, a.zero());
    s[0] = root;
    const BigComplex twice_root = root * 2L;
    for (std::size_t k = 1; k < n; ++k) {
        BigComplex acc = a[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= s[j] * s[k - j];
        }
        s[k] = acc / twice_root;
    }
    return s;
}

}  // namespace norlund
