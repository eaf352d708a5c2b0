#include "weylmod/parking.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace weylmod {

void CapacityVector::validate() const {
    if (caps.empty()) throw std::invalid_argument("capacity vector needs at least one lot");
    for (int c : caps)
        if (c < 0) throw std::invalid_argument("capacities must be nonnegative");
}

int CapacityVector::total() const { return std::accumulate(caps.begin(), caps.end(), 0); }

std::vector<int> CapacityVector::prefix_sums() const {
    std::vector<int> p(caps.size() + 1, 0);
    for (size_t s = 0; s < caps.size(); ++s) p[s + 1] = p[s] + caps[s];
    return p;
}

bool is_parking(const ParkingFunction& f, const CapacityVector& m) {
    if (static_cast<int>(f.size()) != m.total())
        throw std::invalid_argument("parking function length must equal |m|");
    const int N = m.lots();
    std::vector<int> hist(N + 1, 0);
    for (int v : f) {
        if (v < 1) throw std::invalid_argument("preferences must be >= 1");
        if (v <= N) ++hist[v];
        // values beyond N only make the prefix counts smaller
    }
    const auto M = m.prefix_sums();
    int cum = 0;
    for (int s = 1; s <= N; ++s) {
        cum += hist[s];
        if (cum < M[s]) return false;
    }
    return true;
}

bool parks_by_simulation(const ParkingFunction& f, const CapacityVector& m) {
    if (static_cast<int>(f.size()) != m.total())
        throw std::invalid_argument("parking function length must equal |m|");
    const int N = m.lots();
    std::vector<int> free(m.caps);
    for (int v : f) {
        if (v < 1) throw std::invalid_argument("preferences must be >= 1");
        int lot = v;
        while (lot <= N && free[lot - 1] == 0) ++lot;
        if (lot > N) return false;
        --free[lot - 1];
    }
    return true;
}

std::set<int> boundary_points(const ParkingFunction& f, const CapacityVector& m) {
    if (!is_parking(f, m)) throw std::domain_error("boundary_points: not a parking function");
    const int N = m.lots();
    const auto M = m.prefix_sums();
    std::vector<int> hist(N + 1, 0);
    for (int v : f)
        if (v <= N) ++hist[v];
    std::set<int> out;
    int cum = 0;
    for (int s = 1; s < N; ++s) {
        cum += hist[s];
        if (cum == M[s]) out.insert(s);
    }
    return out;
}

namespace {

bool gaps_within(const std::set<int>& boundaries, int N, int l) {
    int last = 0;
    for (int b : boundaries) {
        if (b - last > l) return false;
        last = b;
    }
    return N - last <= l;
}

} // namespace

bool truncated_member(const ParkingFunction& f, const CapacityVector& m, int l) {
    if (l < 1) throw std::domain_error("truncation parameter must be >= 1");
    return gaps_within(boundary_points(f, m), m.lots(), l);
}

namespace {

// Enumerates preference vectors with a fixed first value; cheap prefix
// bounds prune the scan. Returns the count of members.
ExactInt count_slice(const CapacityVector& m, int first, std::optional<int> l) {
    const int n = m.total();
    const int N = m.lots();
    ExactInt cnt = 0;
    ParkingFunction f(n, 1);
    f[0] = first;
    if (n == 1) {
        if (is_parking(f, m) && (!l || truncated_member(f, m, *l))) cnt = 1;
        return cnt;
    }
    while (true) {
        if (is_parking(f, m) && (!l || truncated_member(f, m, *l))) ++cnt;
        int pos = n - 1;
        while (pos >= 1 && f[pos] == N) {
            f[pos] = 1;
            --pos;
        }
        if (pos < 1) break;
        ++f[pos];
    }
    return cnt;
}

void check_enumeration_budget(const CapacityVector& m, long budget) {
    ExactInt cand = pow_int(ExactInt(m.lots()), m.total());
    if (cand > budget)
        throw BudgetError("enumeration budget exceeded (" + dec(cand) + " candidates > " +
                          std::to_string(budget) + "); use the subset-counting route instead");
}

} // namespace

ExactInt count_parking(const CapacityVector& m, std::optional<int> l, long budget, int jobs) {
    check_enumeration_budget(m, budget);
    const int N = m.lots();
    if (m.total() == 0) return is_parking({}, m) ? 1 : 0;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 1 || N == 1 || m.total() < 8) {
        ExactInt cnt = 0;
        for (int first = 1; first <= N; ++first) cnt += count_slice(m, first, l);
        return cnt;
    }
    std::vector<ExactInt> partial(N);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int workers = std::min(jobs, N);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < N; i = next.fetch_add(1))
                partial[i] = count_slice(m, i + 1, l);
        });
    }
    for (auto& t : pool) t.join();
    ExactInt cnt = 0;
    for (const auto& p : partial) cnt += p;  // fixed order: deterministic
    return cnt;
}

void for_each_parking(const CapacityVector& m,
                      const std::function<void(const ParkingFunction&)>& fn,
                      std::optional<int> l, long budget) {
    check_enumeration_budget(m, budget);
    const int n = m.total();
    const int N = m.lots();
    ParkingFunction f(n, 1);
    if (n == 0) {
        if (is_parking(f, m)) fn(f);
        return;
    }
    while (true) {
        if (is_parking(f, m) && (!l || truncated_member(f, m, *l))) fn(f);
        int pos = n - 1;
        while (pos >= 0 && f[pos] == N) {
            f[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++f[pos];
    }
}

std::vector<int> SubsetH::content() const {
    std::vector<int> k(rank, 0);
    for (auto [i, j] : cells) {
        if (i < 1 || i > rank || j < 1) throw std::invalid_argument("subset cell out of range");
        ++k[i - 1];
    }
    return k;
}

bool subset_satisfies(const SubsetH& h, const CapacityVector& m) {
    if (static_cast<int>(h.cells.size()) != m.total()) return false;
    const int N = m.lots();
    const auto M = m.prefix_sums();
    std::vector<int> hist(N + 1, 0);
    for (auto [i, j] : h.cells)
        if (j <= N) ++hist[j];
    int cum = 0;
    for (int s = 1; s <= N; ++s) {
        cum += hist[s];
        if (cum < M[s]) return false;
    }
    return true;
}

std::set<int> boundary_points(const SubsetH& h, const CapacityVector& m) {
    if (!subset_satisfies(h, m)) throw std::domain_error("boundary_points: subset fails prefix bound");
    const int N = m.lots();
    const auto M = m.prefix_sums();
    std::vector<int> hist(N + 1, 0);
    for (auto [i, j] : h.cells)
        if (j <= N) ++hist[j];
    std::set<int> out;
    int cum = 0;
    for (int s = 1; s < N; ++s) {
        cum += hist[s];
        if (cum == M[s]) out.insert(s);
    }
    return out;
}

bool subset_truncated_member(const SubsetH& h, const CapacityVector& m, int l) {
    if (l < 1) throw std::domain_error("truncation parameter must be >= 1");
    return gaps_within(boundary_points(h, m), m.lots(), l);
}

WeightTable subset_content_table(const CapacityVector& m, int r, int l) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    if (l < 0) throw std::domain_error("truncation parameter must be >= 0");
    const int N = m.lots();
    const int total = m.total();
    const auto M = m.prefix_sums();

    // State: per-row cell counts so far, plus columns elapsed since the
    // last boundary when truncating. One cell per (row, column) at most,
    // so each column contributes a subset of the r rows.
    using State = std::pair<std::vector<int>, int>;
    std::map<State, ExactInt> cur;
    cur[{std::vector<int>(r, 0), 0}] = 1;

    for (int s = 1; s <= N; ++s) {
        std::map<State, ExactInt> next;
        for (const auto& [state, ways] : cur) {
            const auto& [counts, gap] = state;
            const int tot = std::accumulate(counts.begin(), counts.end(), 0);
            for (int mask = 0; mask < (1 << r); ++mask) {
                const int add = __builtin_popcount(static_cast<unsigned>(mask));
                const int tot2 = tot + add;
                if (tot2 < M[s] || tot2 > total) continue;
                int gap2 = 0;
                if (l >= 1) {
                    gap2 = gap + 1;
                    if (gap2 > l) continue;  // no continuation can close this gap in time
                    if (s < N && tot2 == M[s]) gap2 = 0;
                }
                std::vector<int> counts2(counts);
                for (int i = 0; i < r; ++i)
                    if (mask & (1 << i)) ++counts2[i];
                next[{std::move(counts2), gap2}] += ways;
            }
        }
        cur = std::move(next);
    }

    WeightTable out(r);
    for (const auto& [state, ways] : cur) out.add(state.first, ways);
    return out;
}

ExactInt count_subsets(const CapacityVector& m, int r, const std::vector<int>& k, int l) {
    if (static_cast<int>(k.size()) != r) throw std::invalid_argument("content vector must have length r");
    int sum = 0;
    for (int ki : k) {
        if (ki < 0) throw std::invalid_argument("content entries must be nonnegative");
        sum += ki;
    }
    if (sum != m.total()) throw std::invalid_argument("content sum mismatch: expected |m|");
    return subset_content_table(m, r, l).get(k);
}

int cycle_shift_index(const ParkingFunction& f) {
    const int n = static_cast<int>(f.size());
    if (n == 0) throw std::invalid_argument("cycle_shift_index: empty function");
    for (int v : f)
        if (v < 1 || v > n + 1) throw std::invalid_argument("values must lie in 1..n+1");
    // minimize (n+1)F(s) = (n+1)|f^{-1}({1..s})| - ns; minimum is unique
    std::vector<int> hist(n + 2, 0);
    for (int v : f) ++hist[v];
    long best = 0;
    int best_s = 0;
    long cum = 0;
    for (int s = 1; s <= n + 1; ++s) {
        cum += hist[s];
        long val = static_cast<long>(n + 1) * cum - static_cast<long>(n) * s;
        if (best_s == 0 || val < best) {
            best = val;
            best_s = s;
        }
    }
    const int k = n + 2 - best_s;
    // totality is a theorem; verify on the way out
    std::vector<int> shifted(n);
    for (int i = 0; i < n; ++i) shifted[i] = (f[i] + k - 2) % (n + 1) + 1;
    std::vector<int> h2(n + 2, 0);
    for (int v : shifted) ++h2[v];
    int c = 0;
    for (int s = 1; s <= n; ++s) {
        c += h2[s];
        if (c < s) throw std::logic_error("cycle_shift_index: post-check failed");
    }
    return k;
}

ExactInt perm_trace(const CapacityVector& m, const Partition& cycle_type, bool sign_twist,
                    std::optional<int> l, long budget) {
    const int n = m.total();
    if (cycle_type.sum() != n) throw std::invalid_argument("cycle type must partition |m|");
    for (int c : cycle_type.parts())
        if (c < 1) throw std::invalid_argument("bad cycle type");
    const int N = m.lots();
    const int ncyc = cycle_type.length();
    ExactInt cand = pow_int(ExactInt(N), ncyc);
    if (cand > budget) throw BudgetError("trace enumeration budget exceeded");

    // fixed points of a permutation are the preference vectors constant on
    // its cycles; enumerate one value per cycle
    ExactInt cnt = 0;
    std::vector<int> val(ncyc, 1);
    ParkingFunction f(n);
    while (true) {
        int pos0 = 0;
        for (int c = 0; c < ncyc; ++c) {
            std::fill(f.begin() + pos0, f.begin() + pos0 + cycle_type.parts()[c], val[c]);
            pos0 += cycle_type.parts()[c];
        }
        if (is_parking(f, m) && (!l || truncated_member(f, m, *l))) ++cnt;
        int pos = ncyc - 1;
        while (pos >= 0 && val[pos] == N) {
            val[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++val[pos];
    }
    if (sign_twist && (n - ncyc) % 2 == 1) cnt = -cnt;
    return cnt;
}

} // namespace weylmod
