#include "weylmod/coinvariants.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

#include "weylmod/characters.hpp"

namespace weylmod {

namespace {

using Mono = std::vector<int>;  // exponents of one tensor slot

bool slot_monomial_valid(const AlgebraPresentation& a, const Mono& m) {
    switch (a.kind) {
        case AlgebraPresentation::Kind::polynomial: return true;
        case AlgebraPresentation::Kind::double_point: return m[0] == 0 || m[1] == 0;
        case AlgebraPresentation::Kind::truncated_line: return m[0] < a.param;
    }
    return false;
}

// product of two slot monomials; false if it dies in the quotient
bool slot_multiply(const AlgebraPresentation& a, const Mono& x, const Mono& y, Mono& out) {
    out.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return slot_monomial_valid(a, out);
}

// all valid slot monomials with exponents bounded by `limit` componentwise
void valid_monomials_upto(const AlgebraPresentation& a, const std::vector<int>& limit,
                          std::vector<Mono>& out) {
    const int v = static_cast<int>(limit.size());
    Mono cur(v, 0);
    auto rec = [&](auto&& self, int var) -> void {
        if (var == v) {
            if (slot_monomial_valid(a, cur)) out.push_back(cur);
            return;
        }
        for (int e = 0; e <= limit[var]; ++e) {
            cur[var] = e;
            self(self, var + 1);
        }
        cur[var] = 0;
    };
    rec(rec, 0);
}

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(parts, 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == parts - 1) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[i] = e;
            self(self, i + 1, rem - e);
        }
    };
    rec(rec, 0, total);
    return out;
}

std::vector<int> canonical_permutation(const Partition& cycle_type) {
    std::vector<int> p(cycle_type.sum());
    int base = 0;
    for (int c : cycle_type.parts()) {
        for (int j = 0; j < c; ++j) p[base + j] = base + (j + 1) % c;
        base += c;
    }
    return p;
}

} // namespace

int DhComputation::default_stall(const AlgebraPresentation& alg, int n) {
    return std::max(1, n * alg.num_vars());
}

int DhComputation::default_cap(const AlgebraPresentation& alg, int n, int stall) {
    return alg.num_vars() * n * (n - 1) / 2 + stall + 4;
}

DhComputation::DhComputation(const AlgebraPresentation& alg, int n, int stall, int cap, int jobs)
    : alg_(alg), n_(n) {
    if (n < 1) throw std::domain_error("coinvariants: n must be >= 1");
    if (stall < 0) stall = default_stall(alg, n);
    if (stall < 1) throw std::domain_error("coinvariants: stall must be >= 1");
    if (cap < 0) cap = default_cap(alg, n, stall);
    if (cap < stall) throw std::domain_error("coinvariants: cap must be >= stall");
    report_.algebra = alg_;
    report_.n = n_;
    run(stall, cap, jobs);
}

DhComputation::Block DhComputation::build_block(int degree,
                                                const std::vector<int>& multidegree) const {
    (void)degree;
    Block b;
    b.multidegree = multidegree;
    const int v = alg_.num_vars();

    // ambient monomials: n-tuples of valid slot monomials with the given
    // per-variable column sums
    std::vector<int> rem(multidegree);
    std::vector<Mono> tuple(n_, Mono(v, 0));
    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == n_ - 1) {
            if (!slot_monomial_valid(alg_, rem)) return;
            tuple[slot] = rem;
            std::vector<int> flat;
            flat.reserve(n_ * v);
            for (const auto& u : tuple)
                flat.insert(flat.end(), u.begin(), u.end());
            b.cols.push_back(std::move(flat));
            return;
        }
        std::vector<Mono> choices;
        valid_monomials_upto(alg_, rem, choices);
        for (const auto& u : choices) {
            for (int i = 0; i < v; ++i) rem[i] -= u[i];
            tuple[slot] = u;
            self(self, slot + 1);
            for (int i = 0; i < v; ++i) rem[i] += u[i];
        }
    };
    if (n_ >= 1) rec(rec, 0);
    std::sort(b.cols.begin(), b.cols.end());
    for (size_t i = 0; i < b.cols.size(); ++i) b.colindex.emplace(b.cols[i], static_cast<int>(i));
    b.ech = SparseEchelon(static_cast<int>(b.cols.size()));
    if (b.cols.empty()) return b;

    // ideal rows: polarized power sum of every nonconstant monomial of the
    // algebra times every ambient monomial of the complementary block
    std::vector<Mono> gens;
    valid_monomials_upto(alg_, multidegree, gens);
    Mono prod;
    for (const auto& g : gens) {
        if (std::accumulate(g.begin(), g.end(), 0) == 0) continue;
        std::vector<int> crem(v);
        for (int i = 0; i < v; ++i) crem[i] = multidegree[i] - g[i];
        // complementary ambient monomials, built the same way
        std::vector<Mono> ctuple(n_, Mono(v, 0));
        std::vector<int> crem2(crem);
        auto crec = [&](auto&& self, int slot) -> void {
            if (slot == n_ - 1) {
                if (!slot_monomial_valid(alg_, crem2)) return;
                ctuple[slot] = crem2;
                SparseRow row;
                for (int k = 0; k < n_; ++k) {
                    if (!slot_multiply(alg_, ctuple[k], g, prod)) continue;
                    std::vector<int> flat;
                    flat.reserve(n_ * v);
                    for (int s = 0; s < n_; ++s) {
                        const Mono& u = (s == k) ? prod : ctuple[s];
                        flat.insert(flat.end(), u.begin(), u.end());
                    }
                    row.emplace_back(b.colindex.at(flat), ExactInt(1));
                }
                if (row.empty()) return;
                std::sort(row.begin(), row.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                ++b.rows_fed;
                b.ech.add_row(std::move(row));
            } else {
                std::vector<Mono> choices;
                valid_monomials_upto(alg_, crem2, choices);
                for (const auto& u : choices) {
                    for (int i = 0; i < v; ++i) crem2[i] -= u[i];
                    ctuple[slot] = u;
                    self(self, slot + 1);
                    for (int i = 0; i < v; ++i) crem2[i] += u[i];
                }
            }
        };
        bool fits = true;
        for (int i = 0; i < v; ++i)
            if (crem[i] < 0) fits = false;
        if (fits) crec(crec, 0);
    }
    return b;
}

void DhComputation::run(int stall, int cap, int jobs) {
    const auto t0 = std::chrono::steady_clock::now();
    const int v = alg_.num_vars();
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());

    for (int degree = 0;; ++degree) {
        if (degree > cap) {
            report_.converged = false;
            report_.total = 0;
            for (const auto& [d, x] : report_.dims) report_.total += x;
            report_.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
            throw NonConvergenceError(report_);
        }
        auto mds = compositions(degree, v);
        std::vector<Block> blocks(mds.size());
        {
            std::atomic<size_t> next{0};
            auto worker = [&] {
                for (size_t i = next.fetch_add(1); i < mds.size(); i = next.fetch_add(1))
                    blocks[i] = build_block(degree, mds[i]);
            };
            const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(mds.size())));
            if (workers == 1) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
                for (auto& t : pool) t.join();
            }
        }
        ExactInt dim = 0;
        DegreeStats st;
        for (auto& b : blocks) {
            const long amb = static_cast<long>(b.cols.size());
            const long rank = b.ech.rank();
            if (rank > amb) throw std::logic_error("coinvariants: rank exceeds ambient dimension");
            dim += amb - rank;
            st.ambient += amb;
            st.rows += b.rows_fed;
            st.rank += rank;
            if (amb - rank > 0) report_.multigraded[b.multidegree] = ExactInt(amb - rank);
        }
        report_.dims[degree] = dim;
        report_.stats[degree] = st;
        blocks_[degree] = std::move(blocks);

        if (degree > 0 && dim == 0) {
            // the quotient algebra is generated in degree one, so one zero
            // degree forces all later ones to vanish; report the stall
            // window on that basis
            for (int k = 1; k < stall; ++k) report_.dims[degree + k] = 0;
            report_.converged = true;
            top_ = degree;
            break;
        }
    }
    report_.total = 0;
    for (const auto& [d, x] : report_.dims) report_.total += x;
    report_.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
}

ExactInt DhComputation::block_trace(const Block& b, const std::vector<int>& perm) const {
    if (b.ech.rank() == static_cast<int>(b.cols.size())) return 0;  // zero quotient block
    const int v = alg_.num_vars();
    // trace on the ambient block: fixed monomial tuples
    ExactInt ambient_fixed = 0;
    for (const auto& flat : b.cols) {
        bool fixed = true;
        for (int i = 0; i < n_ && fixed; ++i) {
            const int j = perm[i];
            for (int t = 0; t < v; ++t)
                if (flat[i * v + t] != flat[j * v + t]) {
                    fixed = false;
                    break;
                }
        }
        if (fixed) ++ambient_fixed;
    }
    // trace on the ideal: diagonal of the expression of permuted pivot rows
    ExactRat ideal_trace = 0;
    const auto& rows = b.ech.rows();
    std::vector<int> flat2(n_ * v);
    for (size_t t = 0; t < rows.size(); ++t) {
        SparseRow permuted;
        permuted.reserve(rows[t].size());
        for (const auto& [col, val] : rows[t]) {
            const auto& flat = b.cols[col];
            for (int i = 0; i < n_; ++i)
                for (int q = 0; q < v; ++q) flat2[perm[i] * v + q] = flat[i * v + q];
            permuted.emplace_back(b.colindex.at(flat2), val);
        }
        std::sort(permuted.begin(), permuted.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        ideal_trace += b.ech.express(permuted)[t];
    }
    if (!is_integral(ideal_trace))
        throw std::logic_error("coinvariants: non-integral ideal trace");
    return ambient_fixed - ideal_trace.get_num();
}

ExactInt DhComputation::trace(const Partition& cycle_type) {
    if (cycle_type.sum() != n_)
        throw std::invalid_argument("trace: cycle type must partition n");
    auto it = report_.traces.find(cycle_type);
    if (it != report_.traces.end()) return it->second;
    const auto perm = canonical_permutation(cycle_type);
    ExactInt total = 0;
    for (const auto& [degree, blocks] : blocks_)
        for (const auto& b : blocks) total += block_trace(b, perm);
    report_.traces.emplace(cycle_type, total);
    return total;
}

const std::map<Partition, ExactInt>& DhComputation::all_traces() {
    for (const auto& ct : partitions_of(n_)) trace(ct);
    return report_.traces;
}

WeightTable DhComputation::weight_table(int r) {
    return weight_table_from_traces(all_traces(), n_, r);
}

nlohmann::json GradedReport::to_json(bool include_multigraded) const {
    nlohmann::json dims_j;
    for (const auto& [d, x] : dims) dims_j[std::to_string(d)] = dec(x);
    nlohmann::json stats_j;
    for (const auto& [d, s] : stats)
        stats_j[std::to_string(d)] = {{"ambient", s.ambient}, {"rows", s.rows}, {"rank", s.rank}};
    nlohmann::json out{{"algebra", algebra.label()}, {"n", n},           {"dims", dims_j},
                       {"total", dec(total)},        {"converged", converged},
                       {"stats", stats_j},           {"wall_ms", wall_ms}};
    if (!traces.empty()) {
        nlohmann::json tr = nlohmann::json::array();
        for (const auto& [ct, val] : traces)
            tr.push_back({{"cycle_type", ct.parts()}, {"trace", dec(val)}});
        out["traces"] = tr;
    }
    if (include_multigraded) {
        nlohmann::json mg = nlohmann::json::array();
        for (const auto& [md, x] : multigraded)
            mg.push_back({{"degrees", md}, {"dim", dec(x)}});
        out["multigraded"] = mg;
    }
    return out;
}

GradedReport dh_graded_dims(const AlgebraPresentation& alg, int n, int stall, int cap, int jobs) {
    DhComputation c(alg, n, stall, cap, jobs);
    return c.report();
}

namespace {

struct DhCache {
    std::mutex mu;
    std::map<std::pair<AlgebraPresentation, int>, std::shared_ptr<DhComputation>> map;
    static DhCache& instance() {
        static DhCache c;
        return c;
    }
};

} // namespace

std::shared_ptr<DhComputation> dh_shared(const AlgebraPresentation& alg, int n, int jobs) {
    auto& cache = DhCache::instance();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto key = std::make_pair(alg, n);
    auto it = cache.map.find(key);
    if (it != cache.map.end()) return it->second;
    auto ptr = std::make_shared<DhComputation>(alg, n, -1, -1, jobs);
    cache.map.emplace(key, ptr);
    return ptr;
}

ExactInt dh_trace(const AlgebraPresentation& alg, int n, const Partition& cycle_type, int jobs) {
    return dh_shared(alg, n, jobs)->trace(cycle_type);
}

WeightTable weyl_weight_oracle(const AlgebraPresentation& alg, int r, int n, int jobs) {
    return dh_shared(alg, n, jobs)->weight_table(r);
}

} // namespace weylmod
