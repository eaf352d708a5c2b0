#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylmod/exact.hpp"
#include "weylmod/parking.hpp"

using namespace weylmod;

TEST_CASE("membership basics") {
    CHECK(is_parking({1, 2}, CapacityVector{1, 1}));
    CHECK(!is_parking({2, 2}, CapacityVector{1, 1}));
    CHECK(is_parking({1, 1, 3}, CapacityVector{1, 1, 1}));
    CHECK_THROWS_AS(is_parking({1}, CapacityVector{1, 1}), std::invalid_argument);
}

TEST_CASE("counts on small capacity vectors") {
    CHECK(count_parking(CapacityVector{1, 1}) == 3);
    CHECK(count_parking(CapacityVector{1, 1, 1}) == 16);
    CHECK(count_parking(CapacityVector{2}) == 1);
}

TEST_CASE("budget guard") {
    CHECK_THROWS_AS(count_parking(CapacityVector{std::vector<int>(12, 1)}, std::nullopt, 1000),
                    BudgetError);
}

TEST_CASE("|PF(1^n)| = (n+1)^(n-1), with the cycle-count cross-check") {
    for (int n = 1; n <= 6; ++n) {
        CapacityVector m(std::vector<int>(n, 1));
        ExactInt direct = count_parking(m);
        CHECK(direct == pow_int(ExactInt(n + 1), n - 1));
        // (n+1)^n functions fall into orbits of size n+1, one member parks
        CHECK(direct == exact_div(pow_int(ExactInt(n + 1), n), ExactInt(n + 1)));
    }
}

TEST_CASE("lexicographic streaming is ordered and complete") {
    std::vector<ParkingFunction> seen;
    for_each_parking(CapacityVector{1, 1}, [&](const ParkingFunction& f) { seen.push_back(f); });
    REQUIRE(seen.size() == 3);
    CHECK(seen[0] == ParkingFunction{1, 1});
    CHECK(seen[1] == ParkingFunction{1, 2});
    CHECK(seen[2] == ParkingFunction{2, 1});
}

TEST_CASE("no member ever exceeds N even on an extended alphabet") {
    // enumerate over {1..N+2} by hand and check membership forces values <= N
    for (const CapacityVector& m : {CapacityVector{1, 1}, CapacityVector{2, 1}}) {
        const int N = m.lots();
        const int len = m.total();
        std::vector<int> f(len, 1);
        long total = 1;
        for (int i = 0; i < len; ++i) total *= N + 2;
        for (long it = 0; it < total; ++it) {
            long x = it;
            bool big = false;
            for (int i = 0; i < len; ++i) {
                f[i] = static_cast<int>(x % (N + 2)) + 1;
                x /= N + 2;
                if (f[i] > N) big = true;
            }
            if (big) CHECK(!is_parking(f, m));
        }
    }
}

TEST_CASE("boundary points") {
    CHECK(boundary_points(ParkingFunction{1, 2}, CapacityVector{1, 1}) == std::set<int>{1});
    CHECK(boundary_points(ParkingFunction{1, 1}, CapacityVector{1, 1}).empty());
    CHECK(boundary_points(ParkingFunction{1, 2, 2}, CapacityVector{1, 1, 1}) == std::set<int>{1});
    CHECK_THROWS_AS(boundary_points(ParkingFunction{2, 2}, CapacityVector{1, 1}),
                    std::domain_error);
}

TEST_CASE("truncated family counts") {
    CapacityVector m{1, 1, 1};
    CHECK(count_parking(m, 3) == 16);  // l >= N: vacuous
    CHECK(count_parking(m, 1) == 6);
    CHECK(count_parking(m, 2) == 12);
}

TEST_CASE("subset model on small capacity vectors") {
    CHECK(count_subsets(CapacityVector{1, 1}, 2, {1, 1}) == 3);
    CHECK(count_subsets(CapacityVector{1, 1}, 2, {2, 0}) == 1);
    CHECK(count_subsets(CapacityVector{2}, 2, {1, 1}) == 1);
    CHECK_THROWS_AS(count_subsets(CapacityVector{1, 1}, 2, {1, 2}), std::invalid_argument);
}

TEST_CASE("subset structure predicates") {
    SubsetH h{2, {{1, 1}, {2, 2}}};
    CapacityVector m{1, 1};
    CHECK(subset_satisfies(h, m));
    CHECK(boundary_points(h, m) == std::set<int>{1});
    CHECK(h.content() == std::vector<int>{1, 1});
    SubsetH bad{2, {{1, 2}, {2, 2}}};
    CHECK(!subset_satisfies(bad, m));
    SubsetH full{2, {{1, 1}, {2, 1}}};
    CHECK(boundary_points(full, m).empty());  // strict at s=1
    CHECK(subset_truncated_member(full, m, 2));
}

TEST_CASE("cycle relabeling index") {
    CHECK(cycle_shift_index({1}) == 1);
    CHECK(cycle_shift_index({2}) == 2);
    CHECK(cycle_shift_index({3, 3}) == 2);
    CHECK_THROWS_AS(cycle_shift_index({4, 4}), std::invalid_argument);  // value > n+1
}

TEST_CASE("cycle relabeling: exhaustive uniqueness to n = 5") {
    for (int n = 1; n <= 5; ++n) {
        long total = 1;
        for (int i = 0; i < n; ++i) total *= n + 1;
        std::vector<int> f(n);
        for (long it = 0; it < total; ++it) {
            long x = it;
            for (int i = 0; i < n; ++i) {
                f[i] = static_cast<int>(x % (n + 1)) + 1;
                x /= n + 1;
            }
            int hits = 0, found = 0;
            for (int k = 1; k <= n + 1; ++k) {
                std::vector<int> hist(n + 2, 0);
                for (int v : f) ++hist[(v + k - 2) % (n + 1) + 1];
                int cum = 0;
                bool ok = true;
                for (int s = 1; s <= n; ++s) {
                    cum += hist[s];
                    if (cum < s) { ok = false; break; }
                }
                if (ok) { ++hits; found = k; }
            }
            REQUIRE(hits == 1);
            REQUIRE(found == cycle_shift_index(f));
        }
    }
}

TEST_CASE("traces of permutations on PF(m)") {
    CapacityVector m{1, 1};
    CHECK(perm_trace(m, Partition{1, 1}, false) == 3);
    CHECK(perm_trace(m, Partition{2}, false) == 1);
    CHECK(perm_trace(m, Partition{2}, true) == -1);
    CHECK_THROWS_AS(perm_trace(m, Partition{3}, false), std::invalid_argument);
}

TEST_CASE("trace at the identity equals the member count") {
    for (const CapacityVector& m :
         {CapacityVector{1, 1, 1}, CapacityVector{2, 1}, CapacityVector{1, 2}}) {
        Partition ones{std::vector<int>(m.total(), 1)};
        CHECK(perm_trace(m, ones, false) == count_parking(m));
    }
}

TEST_CASE("signed traces frozen from direct enumeration") {
    CapacityVector m{1, 1, 1};
    CHECK(perm_trace(m, Partition{1, 1, 1}, true) == 16);
    CHECK(perm_trace(m, Partition{2, 1}, true) == -4);
    CHECK(perm_trace(m, Partition{3}, true) == 1);
}

TEST_CASE("colored parking totals across contents") {
    // sum over contents equals C(r(n+1), n)/(n+1)
    for (int r = 2; r <= 4; ++r)
        for (int n = 1; n <= 7; ++n) {
            CapacityVector m(std::vector<int>(n, 1));
            CHECK(subset_content_table(m, r).total() ==
                  exact_div(binomial(static_cast<long>(r) * (n + 1), n), ExactInt(n + 1)));
        }
}

TEST_CASE("simulation agrees with the prefix test, exhaustively") {
    for (int N = 1; N <= 3; ++N) {
        std::vector<int> caps(N, 0);
        auto iterate_caps = [&](auto&& self, int idx) -> void {
            if (idx == N) {
                CapacityVector m(caps);
                if (m.total() > 5) return;
                const int len = m.total();
                long total = 1;
                for (int i = 0; i < len; ++i) total *= N;
                std::vector<int> f(len, 1);
                for (long it = 0; it < total; ++it) {
                    long x = it;
                    for (int i = 0; i < len; ++i) {
                        f[i] = static_cast<int>(x % N) + 1;
                        x /= N;
                    }
                    REQUIRE(is_parking(f, m) == parks_by_simulation(f, m));
                }
                return;
            }
            for (int c = 0; c <= 5; ++c) {
                caps[idx] = c;
                self(self, idx + 1);
            }
        };
        iterate_caps(iterate_caps, 0);
    }
}
