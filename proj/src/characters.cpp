#include "weylmod/characters.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace weylmod {

nlohmann::json SymFuncPS::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mu, c] : p_coeffs)
        terms.push_back({{"mu", mu.parts()}, {"coef", dec(c)}});
    return {{"n", degree}, {"p", terms}};
}

WeightTable c1_weight_table(int r, const std::vector<long>& lambda) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    if (static_cast<int>(lambda.size()) > r)
        throw std::invalid_argument("lambda has more entries than the rank");
    WeightTable out = WeightTable::unit(r);
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw std::invalid_argument("fundamental multiplicities must be >= 0");
        if (lambda[i] == 0) continue;
        // i-th exterior power of the vector representation
        const int boxes = static_cast<int>(i) + 1;
        WeightTable fund(r);
        std::vector<int> key(r, 0);
        auto rec = [&](auto&& self, int from, int left) -> void {
            if (left == 0) {
                fund.add(key, 1);
                return;
            }
            for (int j = from; j <= r - left; ++j) {
                key[j] = 1;
                self(self, j + 1, left - 1);
                key[j] = 0;
            }
        };
        rec(rec, 0, boxes);
        out = out.convolve(fund.convolve_power(static_cast<int>(lambda[i])));
    }
    return out;
}

WeightTable c2_weight_table(int r, const Partition& xi) {
    if (xi.empty()) return WeightTable::unit(r);
    return subset_content_table(CapacityVector(xi.transpose().parts()), r, 0);
}

namespace {

struct CharCache {
    std::mutex mu;
    std::map<std::tuple<int, Partition>, WeightTable> rec;
    std::map<std::tuple<int, Partition, int>, WeightTable> rec_trunc;

    static CharCache& instance() {
        static CharCache c;
        return c;
    }
};

template <typename Key, typename Map, typename Fn>
WeightTable memoized(Map& map, std::mutex& mu, const Key& key, Fn&& compute) {
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = map.find(key);
        if (it != map.end()) return it->second;
    }
    WeightTable value = compute();
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = map.emplace(key, std::move(value));
    return it->second;  // idempotent: first insert wins, results identical
}

} // namespace

WeightTable c2_recurrence(int r, const Partition& xi) {
    if (xi.length() > r) return WeightTable(r);  // no content fits in r rows
    auto& cache = CharCache::instance();
    return memoized(cache.rec, cache.mu, std::make_tuple(r, xi), [&]() -> WeightTable {
        if (xi.empty()) return WeightTable::unit(r);
        if (xi.first() == 1) return c2_weight_table(r, xi);  // single column base case
        const auto padded = xi.padded(r);
        const int x1 = padded.front();
        const int xr = padded.back();
        // Sum over the largest boundary point i. Positions below xi_r are
        // forced boundaries, so i starts at xi_r (at 0 the first factor is
        // the boundary-free class); for a full-rank rectangle the only
        // possible value is the last column, x1 - 1.
        const int lo = std::min(xr, x1 - 1);
        WeightTable acc(r);
        for (int i = lo; i <= x1 - 1; ++i) {
            auto [above, below] = split_at(xi, i);
            WeightTable head = above.empty() ? WeightTable::unit(r)
                                             : c2_recurrence(r, shift_cell_to_first_column(above));
            WeightTable prod = head.convolve(c2_recurrence(r, below));
            for (const auto& [k, v] : prod.entries()) acc.add(k, v);
        }
        return acc;
    });
}

WeightTable rec_ii_residual(int r, const Partition& xi, int k) {
    if (k < 1 || k >= r) throw std::domain_error("rec_ii_residual: need 1 <= k < r");
    auto padded = xi.padded(r);
    const int xk = padded[k - 1];
    const int xk1 = padded[k];
    if (xk - xk1 <= 1) throw std::domain_error("rec_ii_residual: requires xi_k - xi_{k+1} > 1");

    auto lowered = padded;  // xi - alpha_k
    lowered[k - 1] -= 1;
    lowered[k] += 1;
    WeightTable lhs =
        table_difference(c2_weight_table(r, xi), c2_weight_table(r, Partition(lowered)));

    auto [top, bottom] = split_at(xi, xk - 1);
    WeightTable rhs = c2_weight_table(r, top).convolve(c2_weight_table(r, bottom));
    for (int i = xk1 + 1; i <= xk - 2; ++i) {
        auto [above, below] = split_at(xi, i);
        auto shifted = above.padded(r);  // (xi_{> i}) - alpha_k
        shifted[k - 1] -= 1;
        shifted[k] += 1;
        WeightTable prod =
            c2_weight_table(r, Partition(shifted)).convolve(c2_weight_table(r, below));
        for (const auto& [key, v] : prod.entries()) rhs.add(key, v);
    }
    return table_difference(lhs, rhs);
}

WeightTable cl_weight_table(int r, const Partition& xi, int l, TableMethod method) {
    if (l < 1) throw std::domain_error("cl_weight_table: l must be >= 1");
    if (xi.length() > r) return WeightTable(r);
    if (xi.empty()) return WeightTable::unit(r);
    if (method == TableMethod::enumerate)
        return subset_content_table(CapacityVector(xi.transpose().parts()), r, l);

    auto& cache = CharCache::instance();
    return memoized(cache.rec_trunc, cache.mu, std::make_tuple(r, xi, l), [&]() -> WeightTable {
        if (xi.first() <= l)  // every gap fits inside a window: no truncation
            return c2_weight_table(r, xi);
        const auto padded = xi.padded(r);
        const int x1 = padded.front();
        const int xr = padded.back();
        int lo = std::max(x1 - l, xr);
        lo = std::min(lo, x1 - 1);  // full-rank rectangle
        WeightTable acc(r);
        for (int i = lo; i <= x1 - 1; ++i) {
            auto [above, below] = split_at(xi, i);
            // the shifted head has width <= l, so its truncation is vacuous
            WeightTable head = above.empty() ? WeightTable::unit(r)
                                             : c2_recurrence(r, shift_cell_to_first_column(above));
            WeightTable prod = head.convolve(cl_weight_table(r, below, l, TableMethod::recurrence));
            for (const auto& [k, v] : prod.entries()) acc.add(k, v);
        }
        return acc;
    });
}

ExactInt cycle_type_centralizer(const Partition& mu) {
    ExactInt z = 1;
    int run = 0;
    int prev = -1;
    for (int p : mu.parts()) {
        z *= p;
        if (p == prev) ++run;
        else run = 1;
        z *= run;
        prev = p;
    }
    return z;
}

SymFuncPS frobenius_char(const CapacityVector& m, bool sign_twist, std::optional<int> l,
                         long budget) {
    const int n = m.total();
    SymFuncPS f;
    f.degree = n;
    for (const auto& mu : partitions_of(n)) {
        ExactInt t = perm_trace(m, mu, sign_twist, l, budget);
        if (t == 0) continue;
        f.p_coeffs[mu] = make_rat(t, cycle_type_centralizer(mu));
    }
    return f;
}

namespace {

struct MNCache {
    std::mutex mu;
    std::map<std::pair<Partition, Partition>, ExactInt> values;
    static MNCache& instance() {
        static MNCache c;
        return c;
    }
};

// Border-strip recursion, one cycle part at a time. Strips of length t are
// bead moves on the beta-number set beta_i = lambda_i + (L - i): pick a
// bead, drop it by t onto a free spot >= 0; the sign is (-1)^(number of
// beads jumped over), which is height-1 of the strip.
ExactInt mn_character(const Partition& lambda, const std::vector<int>& cycles) {
    if (cycles.empty()) return lambda.empty() ? 1 : 0;
    if (lambda.sum() != std::accumulate(cycles.begin(), cycles.end(), 0)) return 0;
    Partition mu_key{std::vector<int>(cycles)};
    auto& cache = MNCache::instance();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.values.find({lambda, mu_key});
        if (it != cache.values.end()) return it->second;
    }
    const int t = cycles.front();
    const std::vector<int> rest(cycles.begin() + 1, cycles.end());
    const int L = lambda.length();
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda.parts()[i] + (L - 1 - i);

    ExactInt acc = 0;
    for (int i = 0; i < L; ++i) {
        const int b = beta[i] - t;
        if (b < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == b) occupied = true;
            if (beta[j] > b && beta[j] < beta[i]) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb(beta);
        nb[i] = b;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts(L);
        for (int j = 0; j < L; ++j) parts[j] = nb[j] - (L - 1 - j);
        ExactInt sub = mn_character(Partition(std::move(parts)), rest);
        if (jumped % 2 == 1) acc -= sub;
        else acc += sub;
    }
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.values.emplace(std::make_pair(lambda, mu_key), acc);
    return acc;
}

} // namespace

ExactInt symmetric_group_character(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum())
        throw std::invalid_argument("character: lambda and mu must partition the same n");
    return mn_character(lambda, mu.parts());
}

std::map<Partition, ExactInt> schur_expand(const SymFuncPS& f) {
    std::map<Partition, ExactInt> out;
    for (const auto& lambda : partitions_of(f.degree)) {
        ExactRat c = 0;
        for (const auto& [mu, coef] : f.p_coeffs)
            c += coef * make_rat(symmetric_group_character(lambda, mu), 1);
        if (c == 0) continue;
        if (!is_integral(c))
            throw std::logic_error("schur_expand: non-integer coefficient at lambda=" + lambda.str());
        out[lambda] = c.get_num();
    }
    return out;
}

WeightTable weight_table_from_traces(const std::map<Partition, ExactInt>& traces, int n, int r) {
    // ch = sum trace(mu)/z_mu p_mu, evaluated in r variables: p_a expands as
    // the table with a in one coordinate, and products convolve.
    std::map<std::vector<int>, ExactRat> acc;
    for (const auto& mu : partitions_of(n)) {
        auto it = traces.find(mu);
        if (it == traces.end())
            throw std::invalid_argument("weight_table_from_traces: missing cycle type " + mu.str());
        if (it->second == 0) continue;
        ExactRat coef = make_rat(it->second, cycle_type_centralizer(mu));
        std::map<std::vector<int>, ExactInt> cur{{std::vector<int>(r, 0), 1}};
        for (int part : mu.parts()) {
            std::map<std::vector<int>, ExactInt> nx;
            for (const auto& [k, v] : cur)
                for (int i = 0; i < r; ++i) {
                    std::vector<int> k2(k);
                    k2[i] += part;
                    nx[k2] += v;
                }
            cur = std::move(nx);
        }
        for (const auto& [k, v] : cur) acc[k] += coef * make_rat(v, 1);
    }
    WeightTable out(r);
    for (const auto& [k, v] : acc) {
        if (v == 0) continue;
        if (!is_integral(v) || v < 0)
            throw std::logic_error("weight_table_from_traces: traces are not a character "
                                   "(multiplicity " + dec(v) + ")");
        out.add(k, v.get_num());
    }
    return out;
}

} // namespace weylmod
