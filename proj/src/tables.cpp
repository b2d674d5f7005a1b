#include "norlund/tables.hpp"

#include "norlund/published.hpp"

#include <cstdlib>
#include <stdexcept>

namespace norlund {

namespace {

const Precision kParsePrecision = Precision::digits(40);

BigFloat published_value(std::string_view text) { return BigFloat::parse(text, kParsePrecision); }

/// Significant digits shown in a decimal literal such as "-1.0029378942e-01".
int printed_digits(std::string_view text) {
    const std::string_view mantissa = text.substr(0, text.find_first_of("eE"));
    int digits = 0;
    bool leading = true;
    for (char c : mantissa) {
        if (c < '0' || c > '9') {
            continue;
        }
        if (leading && c == '0') {
            continue;
        }
        leading = false;
        ++digits;
    }
    return std::max(digits, 1);
}

std::string to_string(const ComplexRational& z) {
    std::string out = z.re.get_str();
    if (z.im != 0) {
        out += "," + z.im.get_str();
    }
    return out;
}

std::string render(const BigFloat& v, int significant, bool paren_exponents) {
    return paren_exponents ? paren_exponent(v, significant) : v.to_scientific(significant);
}

std::string render_published(std::string_view text, bool paren_exponents) {
    return paren_exponents ? paren_exponent(published_value(text), printed_digits(text)) : std::string(text);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string paren_exponent(const BigFloat& value, int significant) {
    const std::string sci = value.to_scientific(significant);
    const std::size_t e = sci.find('e');
    if (e == std::string::npos) {
        return sci;
    }
    const long exponent = std::strtol(sci.c_str() + e + 1, nullptr, 10);
    return sci.substr(0, e) + "(" + std::to_string(exponent) + ")";
}

bool agrees_to_significant(const BigFloat& computed, std::string_view published, int digits) {
    const BigFloat p = published_value(published);
    if (p.is_zero()) {
        return computed.is_zero();
    }
    const BigFloat half_unit = pow10(p.exponent10() - (digits - 1), kParsePrecision) / 2L;
    return abs(computed - p) <= half_unit;
}

bool agrees_to_printed_digits(const BigFloat& computed, std::string_view published) {
    const int digits = printed_digits(published);
    return published_value(computed.to_scientific(digits)) == published_value(published);
}

bool agrees_to_decimals(const BigFloat& computed, std::string_view published, int decimals) {
    return abs(computed - published_value(published)) < pow10(-decimals, kParsePrecision) / 2L;
}

ErrorConvention error_convention(int id) {
    return id == 2 ? ErrorConvention::RelativeToApproximation : ErrorConvention::RelativeToExact;
}

std::vector<ErrorCell> error_table(int id, unsigned jobs, const PrecisionConfig& cfg) {
    std::vector<ErrorCell> cells;
    const auto add_columns = [&](const auto& columns) {
        for (const auto& col : columns) {
            for (std::size_t k = 0; k < col.errors.size(); ++k) {
                ErrorCell cell;
                cell.column = col.label;
                cell.n = col.n;
                cell.z = parse_complex_rational(col.z);
                cell.k = k;
                cell.published = col.errors[k];
                cells.push_back(std::move(cell));
            }
        }
    };
    if (id == 1) {
        add_columns(published::table1);
    } else if (id == 2) {
        add_columns(published::table2);
    } else {
        throw std::invalid_argument("error_table covers tables 1 and 2");
    }
    const ErrorConvention convention = error_convention(id);
    const Precision p = cfg.precision();

    return parallel_map<ErrorCell>(cells.size(), jobs, [&](std::size_t i) {
        ErrorCell cell = cells[i];
        const BigComplex approx = dispatch(cell.n, cell.z.to_big(p), cell.k, cfg).value;
        const BigComplex exact = eval_exact(cell.n, cell.z).to_big(p.doubled());
        const BigFloat denominator = convention == ErrorConvention::RelativeToExact ? abs(exact) : abs(approx);
        cell.computed = abs(exact - approx) / denominator;
        cell.agrees = agrees_to_significant(cell.computed, cell.published, 3);
        return cell;
    });
}

std::vector<CoefficientComparison> coefficient_table(const PrecisionConfig& cfg) {
    const Precision p = cfg.precision();
    const SaddleContext ctx = SaddleContext::make(parse_complex_rational(published::table3_z).to_big(p), 0);
    const CoefficientSet coeffs = expansion_coefficients(ctx, published::table3.size(), true);
    std::vector<CoefficientComparison> rows;
    for (const published::CoefficientRow& row : published::table3) {
        CoefficientComparison c;
        c.k = row.k;
        c.computed = coeffs.values[static_cast<std::size_t>(row.k)];
        c.published_re = row.re;
        c.published_im = row.im;
        c.agrees = agrees_to_printed_digits(c.computed.re, row.re) && agrees_to_printed_digits(c.computed.im, row.im);
        rows.push_back(std::move(c));
    }
    return rows;
}

std::vector<StokesComparison> stokes_table(unsigned jobs, const PrecisionConfig& cfg) {
    const auto& rows = published::table4;
    return parallel_map<StokesComparison>(rows.size(), jobs, [&](std::size_t i) {
        const published::StokesRow& row = rows[i];
        StokesComparison c;
        c.x = row.x;
        c.z = parse_complex_rational(row.z);
        const bool below = c.z.re < 1;
        c.probe = stokes_probe(published::table4_n, c.z, cfg, !below);
        c.published_difference_re = row.difference_re;
        c.published_difference_im = row.difference_im;
        c.published_s1_re = row.s1_re;
        c.published_s1_im = row.s1_im;
        c.difference_agrees = agrees_to_decimals(c.probe.exact_minus_S0.re, row.difference_re, 4) &&
                              agrees_to_decimals(c.probe.exact_minus_S0.im, row.difference_im, 4);
        c.s1_agrees = agrees_to_decimals(c.probe.S1_value.re, row.s1_re, 4) &&
                      agrees_to_decimals(c.probe.S1_value.im, row.s1_im, 4);
        const double ratio = c.probe.ratio.to_double();
        c.pattern_holds = below ? (ratio >= 0.5 && ratio <= 2.0) : ratio > 10.0;
        return c;
    });
}

TextTable render_table(int id, unsigned jobs, const PrecisionConfig& cfg, bool paren_exponents) {
    TextTable t;
    switch (id) {
    case 1:
    case 2: {
        t.title = id == 1 ? "Table 1: relative error of the complex-z expansion, n = 20"
                          : "Table 2: relative error of the real-x expansion";
        t.title += error_convention(id) == ErrorConvention::RelativeToExact ? " (|exact - approx|/|exact|)"
                                                                            : " (|exact - approx|/|approx|)";
        t.columns = {"column", "n", "z", "k", "computed", "paper_value", "discrepancy", "agrees_3sf"};
        for (const ErrorCell& c : error_table(id, jobs, cfg)) {
            const BigFloat published = published_value(c.published);
            const BigFloat discrepancy = abs(c.computed - published) / abs(published);
            t.rows.push_back({c.column, std::to_string(c.n), to_string(c.z), std::to_string(c.k),
                              render(c.computed, 4, paren_exponents), render_published(c.published, paren_exponents),
                              render(discrepancy, 3, paren_exponents), yes_no(c.agrees)});
        }
        break;
    }
    case 3: {
        t.title = "Table 3: coefficients A_k at z = 2/3 + i/4 (dominant saddle)";
        t.columns = {"k", "computed_re", "computed_im", "paper_value_re", "paper_value_im", "agrees_all_digits"};
        for (const CoefficientComparison& c : coefficient_table(cfg)) {
            t.rows.push_back({std::to_string(c.k), render(c.computed.re, 11, paren_exponents),
                              render(c.computed.im, 11, paren_exponents), render_published(c.published_re, paren_exponents),
                              render_published(c.published_im, paren_exponents), yes_no(c.agrees)});
        }
        break;
    }
    case 4: {
        t.title = "Table 4: exact minus optimally truncated S0 against S1 (K <= 3), n = 10, z = x + i/4";
        t.columns = {"x",           "optimal_k",      "difference_re", "difference_im", "paper_value_difference_re",
                     "paper_value_difference_im", "S1_re", "S1_im", "paper_value_S1_re", "paper_value_S1_im",
                     "ratio",       "difference_agrees", "S1_agrees", "pattern_holds"};
        for (const StokesComparison& c : stokes_table(jobs, cfg)) {
            t.rows.push_back({c.x,
                              std::to_string(c.probe.optimal_k),
                              c.probe.exact_minus_S0.re.to_fixed(6),
                              c.probe.exact_minus_S0.im.to_fixed(6),
                              c.published_difference_re,
                              c.published_difference_im,
                              c.probe.S1_value.re.to_fixed(6),
                              c.probe.S1_value.im.to_fixed(6),
                              c.published_s1_re,
                              c.published_s1_im,
                              render(c.probe.ratio, 4, paren_exponents),
                              yes_no(c.difference_agrees),
                              yes_no(c.s1_agrees),
                              yes_no(c.pattern_holds)});
        }
        break;
    }
    default:
        throw std::invalid_argument("table id must be 1, 2, 3 or 4");
    }
    return t;
}

}  // namespace norlund
