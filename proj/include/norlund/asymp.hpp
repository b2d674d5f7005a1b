#ifndef NORLUND_ASYMP_HPP
#define NORLUND_ASYMP_HPP

// Large-n expansions of B_n^(n)(n z): real x > 1, real 1/2 <= x < 1, the
// midpoint x = 1/2, and complex z with the dominant saddle s_0 plus the
// exponentially small s_1 contribution below the Stokes line Re z = 1.

#include "norlund/bigcomplex.hpp"
#include "norlund/ratcore.hpp"
#include "norlund/saddle.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace norlund {

enum class RegimeKind {
    RealGreaterOne,    ///< x > 1, one real saddle
    RealUnitInterval,  ///< 1/2 < x < 1, conjugate saddles s_0, s_{-1}
    RealHalf,          ///< x = 1/2
    ComplexWithS1,     ///< 1/2 <= x < 1, y > 0: S_0 + S_1
    ComplexS0Only,     ///< x > 1, y > 0: S_0
    StokesLine,        ///< x = 1, y > 0: S_0 only, subdominant part not available
};

/// Regime of the canonical point plus the symmetry used to reach it.
struct Regime {
    RegimeKind kind = RegimeKind::RealGreaterOne;
    bool reflected = false;   ///< z -> 1 - z, value picks up (-1)^n
    bool conjugated = false;  ///< z -> conj(z), value conjugated

    std::string name() const;
    friend bool operator==(const Regime&, const Regime&) = default;
};

std::string to_string(RegimeKind kind);

struct AsymptoticResult {
    /// prefactor * sum(terms[0..truncation_k]) + subdominant
    BigComplex value;
    std::vector<BigComplex> terms;
    std::size_t truncation_k = 0;
    Regime regime;
    BigComplex prefactor;
    /// |prefactor * first omitted term|
    BigFloat error_estimate;
    std::optional<BigComplex> subdominant;
    std::vector<std::string> warnings;
};

/// Sum of the dominant series truncated after term k (inclusive), times the prefactor.
BigComplex partial_sum(const AsymptoticResult& r, std::size_t k);

/// 2^k (1/2)_k / n^k for k = 0..K.
std::vector<BigFloat> gaussian_moment_weights(unsigned n, std::size_t K, Precision p);

AsymptoticResult theorem1(unsigned n, const BigFloat& x, std::size_t K, const PrecisionConfig& cfg = {});
AsymptoticResult theorem2(unsigned n, const BigFloat& x, std::size_t K, const PrecisionConfig& cfg = {});
AsymptoticResult half_case(unsigned n, std::size_t K, const PrecisionConfig& cfg = {});
/// Dominant saddle sum for z in the canonical quadrant.
AsymptoticResult S0(unsigned n, const BigComplex& z, std::size_t K, const PrecisionConfig& cfg = {});
/// Subdominant saddle sum; `force` evaluates it outside 1/2 <= x < 1, y > 0.
AsymptoticResult S1(unsigned n, const BigComplex& z, std::size_t K, const PrecisionConfig& cfg = {},
                    bool force = false);

/// Maps z into Re z >= 1/2, Im z >= 0, picks the regime and maps the result back.
AsymptoticResult dispatch(unsigned n, const BigComplex& z, std::size_t K, const PrecisionConfig& cfg = {});

/// Evaluates one regime's formula at z as given, bypassing classification and
/// symmetry mapping (S1 is evaluated with its guard lifted).  RealHalf and the
/// real regimes use Re z and require Im z = 0.  StokesLine means S0 only.
AsymptoticResult evaluate_forced(unsigned n, const BigComplex& z, std::size_t K, RegimeKind kind,
                                 const PrecisionConfig& cfg = {});

/// Parses a regime name as printed by to_string(RegimeKind).
RegimeKind parse_regime_kind(std::string_view name);

/// Regime that dispatch would pick, without evaluating anything.  Throws like dispatch.
Regime classify(const BigComplex& z, const PrecisionConfig& cfg = {});

struct TruncationChoice {
    std::size_t k = 0;
    bool minimum_found = false;  ///< false if the terms still decrease at k_max
    std::vector<BigFloat> magnitudes;
};

/// Index of the smallest dominant term |term_k|, k <= k_max.
TruncationChoice optimal_truncation(unsigned n, const BigComplex& z, std::size_t k_max, const PrecisionConfig& cfg = {});

struct StokesProbe {
    BigComplex exact_minus_S0;
    BigComplex S1_value;
    std::size_t optimal_k = 0;
    BigFloat ratio;  ///< |S1| / |exact - S0|
};

/// Compares the remainder of the optimally truncated S_0 with S_1 (K <= 3).
/// `k_max` bounds the truncation search; `force` allows Re z >= 1.
StokesProbe stokes_probe(unsigned n, const ComplexRational& z, const PrecisionConfig& cfg = {}, bool force = false,
                         std::size_t k_max = 14);

/// |exact - approx| / |exact| with the exact value converted at twice the working precision.
BigFloat relative_error(const ComplexRational& exact, const BigComplex& approx);

}  // namespace norlund

#endif  // NORLUND_ASYMP_HPP
