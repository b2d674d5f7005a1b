#ifndef NORLUND_CHECKS_HPP
#define NORLUND_CHECKS_HPP

#include "norlund/saddle.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace norlund {

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckItem> items;

    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
};

/// Suite names accepted by run_checks.
const std::vector<std::string>& check_suites();

/// Runs one of: exact, coeffs, tables, stokes, all.  Throws std::invalid_argument otherwise.
CheckReport run_checks(std::string_view suite, unsigned jobs, const PrecisionConfig& cfg = {});

}  // namespace norlund

#endif  // NORLUND_CHECKS_HPP
