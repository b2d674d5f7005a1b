#include "doctest.h"

#include "norlund/checks.hpp"
#include "norlund/tables.hpp"

#include <stdexcept>

using namespace norlund;

namespace {
const Precision P = Precision::digits(40);
BigFloat num(const char* s) { return BigFloat::parse(s, P); }
}  // namespace

TEST_CASE("paren_exponent") {
    CHECK(paren_exponent(num("4.19312e-3"), 4) == "4.193(-3)");
    CHECK(paren_exponent(num("-12.5"), 3) == "-1.25(1)");
}

TEST_CASE("agreement helpers") {
    CHECK(agrees_to_significant(num("4.1934e-3"), "4.193e-3", 3));
    CHECK(agrees_to_significant(num("4.1949e-3"), "4.193e-3", 3));
    CHECK_FALSE(agrees_to_significant(num("4.1990e-3"), "4.193e-3", 3));
    CHECK(agrees_to_printed_digits(num("-1.00293789418e-1"), "-1.0029378942e-01"));
    CHECK_FALSE(agrees_to_printed_digits(num("-1.00293789426e-1"), "-1.0029378942e-01"));
    CHECK(agrees_to_decimals(num("0.012023"), "+0.012027", 4));
    CHECK_FALSE(agrees_to_decimals(num("0.012023"), "+0.012080", 4));
}

TEST_CASE("parallel_map keeps order and rethrows") {
    const std::vector<int> squares = parallel_map<int>(50, 4, [](std::size_t i) { return static_cast<int>(i * i); });
    for (std::size_t i = 0; i < squares.size(); ++i) {
        CHECK(squares[i] == static_cast<int>(i * i));
    }
    CHECK_THROWS_AS(parallel_map<int>(10, 3,
                                      [](std::size_t i) -> int {
                                          if (i == 7) {
                                              throw std::runtime_error("boom");
                                          }
                                          return 0;
                                      }),
                    std::runtime_error);
}

TEST_CASE("error tables use their stated conventions") {
    CHECK(error_convention(1) == ErrorConvention::RelativeToExact);
    CHECK(error_convention(2) == ErrorConvention::RelativeToApproximation);
    const std::vector<ErrorCell> t1 = error_table(1, 2);
    REQUIRE(t1.size() == 20);
    CHECK(t1[3].published == std::string("1.051e-9"));
    CHECK(t1[3].agrees);
    CHECK(error_table(2, 1).size() == 16);
    CHECK_THROWS_AS(error_table(3, 1), std::invalid_argument);
}

TEST_CASE("rendered tables are rectangular and deterministic") {
    for (int id : {1, 2, 3}) {
        const TextTable a = render_table(id, 1, {}, true);
        const TextTable b = render_table(id, 3, {}, true);
        CHECK(a.rows == b.rows);
        for (const auto& row : a.rows) {
            CHECK(row.size() == a.columns.size());
        }
    }
    CHECK(render_table(1, 1, {}, true).rows[0][4] == "4.193(-3)");
    CHECK_THROWS_AS(render_table(5, 1, {}, true), std::invalid_argument);
}

TEST_CASE("check suites") {
    CHECK_THROWS_AS(run_checks("nope", 1), std::invalid_argument);
    const CheckReport exact = run_checks("exact", 2);
    CHECK(exact.ok());
    CHECK(exact.items.size() == 13);
    const CheckReport coeffs = run_checks("coeffs", 2);
    CHECK(coeffs.ok());
}
