#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylmod/exact.hpp"
#include "weylmod/fitpoly.hpp"

using namespace weylmod;

TEST_CASE("binomial basics and conventions") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(5, -1) == 0);
}

TEST_CASE("binomial satisfies the Pascal recurrence up to 50") {
    for (long n = 1; n <= 50; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

namespace {
// independent route: ballot sequences counted by direct recursion
long ballot_count(int open, int close) {
    if (open == 0 && close == 0) return 1;
    long c = 0;
    if (open > 0) c += ballot_count(open - 1, close);
    if (close > open) c += ballot_count(open, close - 1);
    return c;
}
} // namespace

TEST_CASE("catalan values and ballot-sequence oracle") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(5) == 42);
    CHECK_THROWS_AS(catalan(-1), std::domain_error);
    for (int n = 0; n <= 8; ++n)
        CHECK(catalan(n) == ballot_count(n, n));
}

TEST_CASE("exact division guards") {
    CHECK(exact_div(ExactInt(42), ExactInt(7)) == 6);
    CHECK_THROWS_AS(exact_div(ExactInt(5), ExactInt(2)), std::logic_error);
}

TEST_CASE("rationals stay canonical") {
    ExactRat q = make_rat(ExactInt(6), ExactInt(-4));
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(dec(q) == "-3/2");
    CHECK(dec(make_rat(ExactInt(4), ExactInt(2))) == "2");
}

TEST_CASE("fit recovers the triangular numbers") {
    std::vector<GridSample> s;
    for (long n = 1; n <= 6; ++n)
        s.push_back({{n}, ExactRat(ExactInt(n * (n + 1) / 2))});
    auto fit = finite_difference_fit({"n"}, s);
    CHECK(fit.degree(0) == 2);
    CHECK(fit.coefficients().at({2}) == make_rat(1, 2));
    CHECK(fit.coefficients().at({1}) == make_rat(1, 2));
    for (const auto& sample : s)
        CHECK(fit.evaluate(sample.point) == sample.value);
}

TEST_CASE("fit of a constant grid") {
    std::vector<GridSample> s;
    for (long n = 0; n <= 3; ++n) s.push_back({{n}, ExactRat(7)});
    auto fit = finite_difference_fit({"n"}, s);
    CHECK(fit.degree(0) == 0);
    CHECK(fit.evaluate(std::vector<long>{17}) == 7);
}

TEST_CASE("geometric data is rejected") {
    std::vector<GridSample> s{{{1}, ExactRat(1)}, {{2}, ExactRat(2)}, {{3}, ExactRat(4)}};
    CHECK_THROWS_AS(finite_difference_fit({"n"}, s), NotPolynomialError);
}

TEST_CASE("insufficient confirmation margin is rejected") {
    // quadratic sampled at 4 points: one vanishing layer only
    std::vector<GridSample> s;
    for (long n = 0; n <= 3; ++n) s.push_back({{n}, ExactRat(ExactInt(n * n))});
    CHECK_THROWS_AS(finite_difference_fit({"n"}, s), GridTooSmallError);
}

TEST_CASE("single sample fits a constant") {
    auto fit = finite_difference_fit({"n"}, {{{5}, ExactRat(9)}});
    CHECK(fit.degree(0) == 0);
    CHECK(fit.evaluate(std::vector<long>{0}) == 9);
}

TEST_CASE("two-variable fit reproduces samples exactly") {
    // f(a, b) = a(a-1)/2 * b + 3
    std::vector<GridSample> s;
    for (long a = 0; a <= 6; ++a)
        for (long b = 2; b <= 6; ++b)
            s.push_back({{a, b}, ExactRat(ExactInt(a * (a - 1) / 2 * b + 3))});
    auto fit = finite_difference_fit({"a", "b"}, s);
    CHECK(fit.degree(0) == 2);
    CHECK(fit.degree(1) == 1);
    for (const auto& sample : s)
        CHECK(fit.evaluate(sample.point) == sample.value);
    // degrees match the maximal exponent present per variable
    int dmax_a = 0, dmax_b = 0;
    for (const auto& [e, c] : fit.coefficients()) {
        dmax_a = std::max(dmax_a, e[0]);
        dmax_b = std::max(dmax_b, e[1]);
    }
    CHECK(dmax_a == fit.degree(0));
    CHECK(dmax_b == fit.degree(1));
}

TEST_CASE("ragged or duplicated grids are rejected") {
    std::vector<GridSample> dup{{{1}, ExactRat(1)}, {{1}, ExactRat(2)}};
    CHECK_THROWS_AS(finite_difference_fit({"n"}, dup), std::invalid_argument);
    std::vector<GridSample> holes{{{0}, ExactRat(1)}, {{2}, ExactRat(2)}};
    CHECK_THROWS_AS(finite_difference_fit({"n"}, holes), std::invalid_argument);
}
