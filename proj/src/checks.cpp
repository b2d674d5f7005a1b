#include "norlund/checks.hpp"

#include "norlund/asymp.hpp"
#include "norlund/ratcore.hpp"
#include "norlund/tables.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

namespace norlund {

namespace {

CheckItem item(std::string name, bool passed, std::string detail = {}) {
    return {std::move(name), passed, std::move(detail)};
}

std::vector<CheckItem> exact_suite(unsigned jobs) {
    static const std::vector<std::string> grid{"1/3",     "3/4",   "2,1/3",  "-5/2,7", "1/2,1",
                                               "11/10,1/4", "0,1",  "-1,-1/2", "7/3,-2", "13/5"};
    std::vector<CheckItem> out = parallel_map<CheckItem>(grid.size(), jobs, [&](std::size_t i) {
        const ComplexRational z = parse_complex_rational(grid[i]);
        for (unsigned n = 0; n <= 40; ++n) {
            if (!reflection_check(n, z)) {
                return item("reflection z=" + grid[i], false, "fails at n=" + std::to_string(n));
            }
        }
        return item("reflection z=" + grid[i], true, "n=0..40");
    });

    bool second_kind = true;
    unsigned bad = 0;
    for (unsigned n = 0; n <= 40 && second_kind; ++n) {
        second_kind = (second_kind_polynomial(n) - shift_argument(norlund_polynomial(n), Rational(1))).is_zero();
        bad = n;
    }
    out.push_back(item("second kind b_n(z) = B_n^(n)(z+1)", second_kind,
                       second_kind ? "n=0..40" : "fails at n=" + std::to_string(bad)));

    bool interlacing = true;
    for (unsigned n = 1; n <= 25 && interlacing; ++n) {
        interlacing = interlacing_check(n).passed;
        bad = n;
    }
    out.push_back(item("interlacing", interlacing, interlacing ? "n=1..25" : "fails at n=" + std::to_string(bad)));

    bool midpoint = true;
    for (unsigned n = 1; n <= 41 && midpoint; n += 2) {
        midpoint = eval_exact(n, ComplexRational(Rational(1, 2))).is_zero();
        bad = n;
    }
    out.push_back(item("odd n vanish at z=1/2", midpoint, midpoint ? "n=1,3,..,41" : "fails at n=" + std::to_string(bad)));
    return out;
}

std::vector<CheckItem> coeffs_suite(unsigned jobs, const PrecisionConfig& cfg) {
    struct Point {
        const char* z;
        int saddle;
    };
    static const std::vector<Point> grid{
        {"2", 0},      {"3", 0},        {"3/2", 0},     {"2,1", 0},       {"3/4,1", 0},   {"3/4,1", 1},
        {"2/3,1/4", 0}, {"3/4", -1},    {"3/5", -1},    {"6/5,1/4", 0},   {"9/10,1/4", 1}, {"5,-2", 0},
    };
    const Precision p = cfg.precision();
    const BigFloat tol = pow10(-(cfg.digits - 20), p);

    std::vector<CheckItem> out = parallel_map<CheckItem>(grid.size(), jobs, [&](std::size_t i) {
        const SaddleContext ctx = SaddleContext::make(parse_complex_rational(grid[i].z).to_big(p), grid[i].saddle);
        const CoefficientSet c = expansion_coefficients(ctx, 3, true);
        BigFloat worst(0L, p);
        for (int k = 1; k <= 3; ++k) {
            const BigComplex closed = closed_form_A(ctx.h, ctx.s, k);
            worst = std::max(worst, abs(c.values[static_cast<std::size_t>(k)] - closed) / abs(closed));
        }
        return item(std::string("engine vs closed form z=") + grid[i].z + " saddle " + std::to_string(grid[i].saddle),
                    worst < tol, "max relative difference " + worst.to_scientific(3));
    });

    const SaddleContext mid = SaddleContext::make(BigComplex(BigFloat(1L, p) / 2L), -1);
    const CoefficientSet c = expansion_coefficients(mid, 5);
    BigFloat worst(0L, p);
    for (int k = 0; k <= 5; ++k) {
        const BigFloat engine = k % 2 == 0 ? c.values[static_cast<std::size_t>(k)].re
                                           : -c.values[static_cast<std::size_t>(k)].re;
        const BigFloat closed = closed_form_C(k, p);
        worst = std::max(worst, abs(engine - closed) / abs(closed));
    }
    out.push_back(item("midpoint coefficients C_0..C_5", worst < tol, "max relative difference " + worst.to_scientific(3)));

    BigFloat imag(0L, p);
    for (long x : {3L, 4L}) {
        const CoefficientSet r = expansion_coefficients(SaddleContext::make(BigComplex(BigFloat(x, p) / 2L), 0), 10);
        for (const BigComplex& a : r.values) {
            imag = std::max(imag, abs(a.im));
        }
    }
    out.push_back(item("real coefficients for x > 1", imag < tol, "max |Im A_k| " + imag.to_scientific(3)));
    return out;
}

std::vector<CheckItem> tables_suite(unsigned jobs, const PrecisionConfig& cfg) {
    std::vector<CheckItem> out;
    for (int id : {1, 2}) {
        const std::vector<ErrorCell> cells = error_table(id, jobs, cfg);
        std::map<std::string, std::vector<const ErrorCell*>> columns;
        std::vector<std::string> order;
        for (const ErrorCell& c : cells) {
            if (columns.find(c.column) == columns.end()) {
                order.push_back(c.column);
            }
            columns[c.column].push_back(&c);
        }
        for (const std::string& name : order) {
            bool agrees = true;
            bool decreasing = true;
            std::string detail;
            const std::vector<const ErrorCell*>& col = columns[name];
            for (std::size_t k = 0; k < col.size(); ++k) {
                if (!col[k]->agrees) {
                    agrees = false;
                    detail += "k=" + std::to_string(k) + ": computed " + col[k]->computed.to_scientific(4) +
                              " published " + col[k]->published + "; ";
                }
                if (k > 0 && col[k]->computed > col[k - 1]->computed) {
                    decreasing = false;
                }
            }
            const std::string prefix = "table " + std::to_string(id) + " " + name;
            out.push_back(item(prefix + " matches to 3 significant figures", agrees, detail));
            out.push_back(item(prefix + " error decreases with k", decreasing));
        }
        if (id == 2) {
            const double ratio = (cells[8].computed / cells[0].computed).to_double();
            out.push_back(item("table 2 k=0 error ratio n=40/n=20 at x=1/2 in [0.4, 0.6]", ratio >= 0.4 && ratio <= 0.6,
                               "ratio " + std::to_string(ratio)));
        }
    }
    for (const CoefficientComparison& row : coefficient_table(cfg)) {
        const std::string detail = "computed " + row.computed.re.to_scientific(11) + " " +
                                   row.computed.im.to_scientific(11) + "i, published " + row.published_re + " " +
                                   row.published_im + "i";
        if (row.k == 10) {
            // The published last row repeats k = 5; listed for comparison only.
            out.push_back(item("table 3 k=10 (reported only)", true, detail));
            continue;
        }
        out.push_back(item("table 3 k=" + std::to_string(row.k) + " all printed digits", row.agrees, detail));
    }
    return out;
}

std::vector<CheckItem> stokes_suite(unsigned jobs, const PrecisionConfig& cfg) {
    std::vector<CheckItem> out;
    for (const StokesComparison& row : stokes_table(jobs, cfg)) {
        const bool below = row.z.re < 1;
        out.push_back(item("table 4 x=" + row.x + (below ? " S1 present" : " S1 absent"), row.pattern_holds,
                           "|S1|/|exact - S0| = " + row.probe.ratio.to_scientific(4)));
    }
    const Precision p = cfg.precision();
    const BigComplex z = parse_complex_rational("3/5,1/4").to_big(p);
    const auto ratio_at = [&](unsigned n) {
        return (abs(S1(n, z, 3, cfg).value) / abs(S0(n, z, 3, cfg).value)).to_double();
    };
    const double drop = ratio_at(12) / ratio_at(10);
    const double expected = std::exp(-std::numbers::pi);
    out.push_back(item("S1/S0 drops by e^{-2 pi y dn} from n=10 to n=12", std::abs(drop / expected - 1.0) < 0.2,
                       "observed " + std::to_string(drop) + ", expected " + std::to_string(expected)));
    return out;
}

}  // namespace

std::size_t CheckReport::passed() const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; }));
}

std::size_t CheckReport::failed() const { return items.size() - passed(); }

const std::vector<std::string>& check_suites() {
    static const std::vector<std::string> names{"all", "exact", "coeffs", "tables", "stokes"};
    return names;
}

CheckReport run_checks(std::string_view suite, unsigned jobs, const PrecisionConfig& cfg) {
    CheckReport report;
    report.suite = std::string(suite);
    const auto append = [&](std::vector<CheckItem> items) {
        report.items.insert(report.items.end(), std::make_move_iterator(items.begin()),
                            std::make_move_iterator(items.end()));
    };
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "exact") {
        append(exact_suite(jobs));
        known = true;
    }
    if (all || suite == "coeffs") {
        append(coeffs_suite(jobs, cfg));
        known = true;
    }
    if (all || suite == "tables") {
        append(tables_suite(jobs, cfg));
        known = true;
    }
    if (all || suite == "stokes") {
        append(stokes_suite(jobs, cfg));
        known = true;
    }
    if (!known) {
        throw std::invalid_argument("unknown check suite '" + std::string(suite) + "'");
    }
    return report;
}

}  // namespace norlund
