#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "weylmod/formulas.hpp"
#include "weylmod/parking.hpp"
#include "weylmod/verify.hpp"

using namespace weylmod;

TEST_CASE("module dimensions from the tables") {
    CHECK(dim_weyl(1, 3, 2) == 9);
    CHECK(dim_weyl(2, 2, 2) == 5);
    CHECK(dim_weyl(3, 2, 2) == 6);
    CHECK(dim_weyl(0, 2, 3) == binomial(5, 2));
    CHECK(dim_weyl(3, 2, 0) == 1);
    CHECK(dim_weyl(3, 2, 1) == 2);
    CHECK_THROWS_AS(dim_weyl(4, 2, 1), std::domain_error);
    CHECK_THROWS_AS(dim_weyl(2, 2, -1), std::domain_error);
}

TEST_CASE("weight multiplicities") {
    CHECK(weight_dim(1, 2, 3, {2, 1}) == 3);
    CHECK(weight_dim(2, 2, 4, {2, 2}) == 20);
    CHECK(weight_dim(3, 2, 2, {1, 1}) == 4);
    CHECK(weight_dim(2, 2, 4, {2, 1}) == 0);  // content sum != n
    CHECK(weight_dim(3, 1, 3, {3}) == 1);     // rank one collapses to the trivial column
}

TEST_CASE("sl2 columns") {
    CHECK(sl2_weight_dim(2, 4, 2) == 20);
    CHECK(sl2_weight_dim(3, 2, 1) == 4);
    CHECK(sl2_weight_dim(0, 5, 3) == 1);
    CHECK(sl2_weight_dim(0, 5, 6) == 0);
    CHECK(sl2_weight_dim(1, 6, 2) == 15);
}

TEST_CASE("product forms equal the closed forms") {
    for (int d = 1; d <= 3; ++d)
        for (long n = 0; n <= 12; ++n)
            for (long k = 0; k <= std::min<long>(n, 5); ++k) {
                auto pf = sl2_product_form(d, n, k);
                CHECK(exact_div(pf.p_of_n, pf.p_of_k) == sl2_weight_dim(d, n, k));
            }
}

TEST_CASE("double point dimensions and tables") {
    CHECK(double_point_dim(2, 1) == 2);
    CHECK(double_point_dim(2, 3) == 12);
    auto t = double_point_table(2, 2);
    CHECK(t.get({2, 0}) == 1);
    CHECK(t.get({1, 1}) == 3);
    CHECK(t.get({0, 2}) == 1);
    CHECK(t.total() == 5);
    CHECK(t.is_symmetric());
    CHECK_THROWS_AS(double_point_dim(2, 0), std::domain_error);
}

TEST_CASE("infinitesimal neighborhood dimensions") {
    CHECK(hilbert_nbhd(AlgebraPresentation::polynomial(2), 3) == 6);
    CHECK(hilbert_nbhd(AlgebraPresentation::double_point(), 3) == 5);
    CHECK(hilbert_nbhd(AlgebraPresentation::truncated_line(2), 3) == 5);
    for (int d = 0; d <= 4; ++d)
        for (long n = 0; n <= 10; ++n)
            CHECK(hilbert_nbhd(AlgebraPresentation::polynomial(d), n) ==
                  binomial(n + d - 1, d));
}

TEST_CASE("truncated Catalan numbers") {
    CHECK(truncated_catalan(2, 3) == 5);
    CHECK(truncated_catalan(1, 4) == 8);
    CHECK(truncated_catalan(2, 4) == 12);
    CHECK(truncated_catalan(2, 5) == 29);
    for (int l = 1; l <= 4; ++l)
        for (long n = 1; n <= l + 1; ++n)
            CHECK(truncated_catalan(l, n) == catalan(n));
    for (long n = 1; n <= 10; ++n)  // l=1 collapses to powers of two
        CHECK(truncated_catalan(1, n) == pow_int(ExactInt(2), n - 1));
}

TEST_CASE("weight sums equal dimensions") {
    for (int d = 1; d <= 3; ++d)
        for (int r = 1; r <= 4; ++r)
            for (long n = 0; n <= 8; ++n) {
                ExactInt sum = 0;
                std::vector<long> k(r, 0);
                auto rec = [&](auto&& self, int i, long rem) -> void {
                    if (i == r - 1) {
                        k[i] = rem;
                        sum += weight_dim(d, r, n, k);
                        return;
                    }
                    for (long e = 0; e <= rem; ++e) {
                        k[i] = e;
                        self(self, i + 1, rem - e);
                    }
                };
                rec(rec, 0, n);
                CHECK(sum == dim_weyl(d, r, n));
            }
}

TEST_CASE("rank-2 weight formula restricts to the sl2 column") {
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(weight_dim(2, 2, n, {n - k, k}) == sl2_weight_dim(2, n, k));
}

TEST_CASE("catalan shift identity") {
    for (long n = 0; n <= 10; ++n)
        CHECK(dim_weyl(2, 2, n) == catalan(n + 1));
}

TEST_CASE("bundled sequence prefixes") {
    for (const char* name : {"a000108.txt", "a000139.txt"}) {
        std::ifstream in(data_dir() + "/" + name);
        REQUIRE(in.good());
        std::string line;
        int count = 0;
        while (std::getline(in, line))
            if (!line.empty()) ++count;
        CHECK(count == 20);
    }
}

TEST_CASE("algebra presentation parsing") {
    CHECK(AlgebraPresentation::parse("poly:2") == AlgebraPresentation::polynomial(2));
    CHECK(AlgebraPresentation::parse("dp") == AlgebraPresentation::double_point());
    CHECK(AlgebraPresentation::parse("xl:3") == AlgebraPresentation::truncated_line(3));
    CHECK_THROWS_AS(AlgebraPresentation::parse("weird"), std::invalid_argument);
    CHECK(AlgebraPresentation::parse("poly:2").label() == "poly:2");
}
