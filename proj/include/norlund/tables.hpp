#ifndef NORLUND_TABLES_HPP
#define NORLUND_TABLES_HPP

// Regeneration of the four reference tables, side by side with the
// published values, plus the small formatting and worker-pool helpers the
// front end needs.

#include "norlund/asymp.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace norlund {

/// Number of hardware threads, at least 1.
unsigned default_jobs();

/// Evaluates fn(i) for i = 0..count-1 on up to `jobs` threads.  Results are
/// stored by index, so the output order never depends on scheduling.  The
/// first exception thrown by any task is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned jobs, Fn fn) {
    std::vector<T> out(count);
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = fn(i);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (std::thread& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

/// "x.xxx(-y)" with `significant` digits: mantissa, then the power of ten in parentheses.
std::string paren_exponent(const BigFloat& value, int significant);

/// |computed - published| is at most half a unit in the `digits`-th significant figure of `published`.
bool agrees_to_significant(const BigFloat& computed, std::string_view published, int digits);
/// `computed` rounded to as many significant digits as `published` shows is the same number.
bool agrees_to_printed_digits(const BigFloat& computed, std::string_view published);
/// |computed - published| < 0.5e-decimals.
bool agrees_to_decimals(const BigFloat& computed, std::string_view published, int decimals);

enum class ErrorConvention {
    RelativeToExact,          ///< |exact - approx| / |exact|
    RelativeToApproximation,  ///< |exact - approx| / |approx|
};

struct ErrorCell {
    std::string column;
    unsigned n = 0;
    ComplexRational z;
    std::size_t k = 0;
    BigFloat computed;
    std::string published;
    bool agrees = false;  ///< three significant figures
};

/// Tables 1 (complex z) and 2 (real x): relative errors for k = 0..3.
/// Table 1 is measured against |exact| and table 2 against |approx|, the
/// conventions under which the published columns are reproduced.
std::vector<ErrorCell> error_table(int id, unsigned jobs, const PrecisionConfig& cfg = {});
ErrorConvention error_convention(int id);

struct CoefficientComparison {
    int k = 0;
    BigComplex computed;
    std::string published_re;
    std::string published_im;
    bool agrees = false;  ///< every printed digit of both parts
};

/// Table 3: coefficients at z = 2/3 + i/4, k = 1..10.
std::vector<CoefficientComparison> coefficient_table(const PrecisionConfig& cfg = {});

struct StokesComparison {
    std::string x;
    ComplexRational z;
    StokesProbe probe;
    std::string published_difference_re;
    std::string published_difference_im;
    std::string published_s1_re;
    std::string published_s1_im;
    bool difference_agrees = false;  ///< four decimals, both parts
    bool s1_agrees = false;          ///< four decimals, both parts
    /// Below Re z = 1 the subdominant sum explains the remainder (ratio in [1/2, 2]);
    /// above it the sum overshoots the remainder by more than a factor 10.
    bool pattern_holds = false;
};

/// Table 4: remainder of the optimally truncated dominant sum against the
/// subdominant sum, n = 10, z = x + i/4.
std::vector<StokesComparison> stokes_table(unsigned jobs, const PrecisionConfig& cfg = {});

/// String grid for rendering; `paren_exponents` selects x.xxx(-y) over plain exponents.
struct TextTable {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

TextTable render_table(int id, unsigned jobs, const PrecisionConfig& cfg, bool paren_exponents);

}  // namespace norlund

#endif  // NORLUND_TABLES_HPP
