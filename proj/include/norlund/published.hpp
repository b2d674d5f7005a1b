#ifndef NORLUND_PUBLISHED_HPP
#define NORLUND_PUBLISHED_HPP

// TRANSCRIPTIONS of published reference values, copied character for
// character (x(y) notation rewritten as xey).  They are displayed next to
// computed values and used for pass/fail comparison only; no computation
// reads them as input.

#include <array>
#include <cstddef>

namespace norlund::published {

/// Low-order polynomials as printed: {denominator, ascending numerators}.
struct PrintedPolynomial {
    unsigned n;
    long denominator;
    std::array<long, 6> numerators;  ///< unused tail entries are zero
};

inline constexpr std::array<PrintedPolynomial, 6> polynomials{{
    {0, 1, {1, 0, 0, 0, 0, 0}},
    {1, 2, {-1, 2, 0, 0, 0, 0}},
    {2, 6, {5, -12, 6, 0, 0, 0}},
    {3, 4, {-9, 24, -18, 4, 0, 0}},
    {4, 30, {251, -720, 66, -240, 30, 0}},
    {5, 12, {-475, 1449, -1500, 700, -150, 12}},
}};

/// One column of a relative-error table: point, n and the k = 0..3 entries.
struct ErrorColumn {
    unsigned n;
    const char* z;  ///< "re[,im]" rational syntax
    const char* label;
    std::array<const char*, 4> errors;
};

inline constexpr std::array<ErrorColumn, 5> table1{{
    {20, "2", "z=2", {"4.193e-3", "7.780e-6", "3.449e-7", "1.051e-9"}},
    {20, "2,1", "z=2+i", {"4.169e-3", "9.459e-6", "3.323e-7", "1.779e-9"}},
    {20, "1,1", "z=1+i", {"4.173e-3", "9.250e-6", "3.413e-7", "1.630e-9"}},
    {20, "3/4,1", "z=0.75+i", {"4.208e-3", "7.304e-6", "3.378e-7", "2.588e-9"}},
    {20, "1/2,1", "z=0.50+i", {"4.227e-3", "6.123e-6", "3.344e-7", "2.843e-9"}},
}};

inline constexpr std::array<ErrorColumn, 4> table2{{
    {20, "1/2", "n=20 x=0.50", {"7.719e-3", "4.578e-5", "1.909e-6", "3.620e-8"}},
    {20, "3/4", "n=20 x=0.75", {"8.725e-3", "2.597e-5", "7.264e-6", "8.782e-8"}},
    {40, "1/2", "n=40 x=0.50", {"3.871e-3", "1.116e-5", "2.402e-7", "3.094e-9"}},
    {40, "3/4", "n=40 x=0.75", {"4.370e-3", "5.556e-6", "9.012e-7", "8.062e-8"}},
}};

inline constexpr const char* table3_z = "2/3,1/4";

struct CoefficientRow {
    int k;
    const char* re;
    const char* im;
};

inline constexpr std::array<CoefficientRow, 10> table3{{
    {1, "-1.0029378942e-01", "-1.8804724469e-02"},
    {2, "-3.7372334426e-03", "-5.5650719166e-04"},
    {3, "+1.8095948417e-05", "+1.5684946154e-04"},
    {4, "+5.9175620462e-05", "+1.3608152444e-04"},
    {5, "+5.6624929259e-06", "+5.2629558202e-06"},
    {6, "+3.2408350155e-03", "-2.4032813980e-06"},
    {7, "+8.6041310199e-08", "-2.5286915962e-07"},
    {8, "-1.0224648657e-07", "-8.6048696324e-08"},
    {9, "-8.4341941837e-09", "-3.2178913880e-10"},
    {10, "+5.6624929259e-06", "+5.2629558202e-06"},
}};

inline constexpr unsigned table4_n = 10;

struct StokesRow {
    const char* x;
    const char* z;
    const char* difference_re;
    const char* difference_im;
    const char* s1_re;
    const char* s1_im;
};

inline constexpr std::array<StokesRow, 6> table4{{
    {"0.60", "3/5,1/4", "+0.012028", "+0.023460", "+0.012023", "+0.023457"},
    {"0.80", "4/5,1/4", "-0.084193", "-0.037509", "-0.085971", "-0.037707"},
    {"0.90", "9/10,1/4", "-0.089839", "+0.302192", "-0.099150", "+0.254323"},
    {"1.10", "11/10,1/4", "-0.206433", "-0.333096", "+3.281489", "-1.068820"},
    {"1.20", "6/5,1/4", "+0.053277", "+0.082496", "+6.231262", "-9.956311"},
    {"1.40", "7/5,1/4", "-0.018778", "+0.014669", "-32.37578", "-94.11127"},
}};

/// Truncation index at which the dominant series is said to be optimally cut
/// for n = 10, z = 2/3 + i/4.
inline constexpr unsigned optimal_truncation_n = 10;
inline constexpr std::size_t optimal_truncation_k = 10;

}  // namespace norlund::published

#endif  // NORLUND_PUBLISHED_HPP
