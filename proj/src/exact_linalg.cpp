#include "weylmod/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylmod {

void normalize_content(SparseRow& row) {
    if (row.empty()) return;
    ExactInt g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    const bool flip = row.front().second < 0;  // lead positive, for determinism
    if (g == 1 && !flip) return;
    if (flip) g = -g;
    for (auto& [c, v] : row) {
        ExactInt q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        v = std::move(q);
    }
}

namespace {

// out = a*x - b*y on sorted sparse rows
SparseRow combine(const ExactInt& a, const SparseRow& x, const ExactInt& b, const SparseRow& y) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i >= x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            ExactInt v = a * x[i].second - b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

const ExactInt* find_col(const SparseRow& r, int col) {
    auto it = std::lower_bound(r.begin(), r.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    if (it == r.end() || it->first != col) return nullptr;
    return &it->second;
}

} // namespace

SparseRow SparseEchelon::reduce(SparseRow row) const {
    normalize_content(row);
    for (size_t t = 0; t < rows_.size(); ++t) {
        if (row.empty()) break;
        const ExactInt* coeff = find_col(row, pivots_[t]);
        if (!coeff) continue;
        const ExactInt* pv = find_col(rows_[t], pivots_[t]);
        row = combine(*pv, row, *coeff, rows_[t]);
        normalize_content(row);
    }
    return row;
}

bool SparseEchelon::add_row(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    // Markowitz-style pivot: prefer the sparsest column, then the entry of
    // least magnitude, then the lowest column index.
    int best = -1;
    for (size_t i = 0; i < row.size(); ++i) {
        if (best < 0) {
            best = static_cast<int>(i);
            continue;
        }
        const int cc_new = col_count_[row[i].first];
        const int cc_best = col_count_[row[best].first];
        if (cc_new != cc_best) {
            if (cc_new < cc_best) best = static_cast<int>(i);
            continue;
        }
        const int cmp = mpz_cmpabs(row[i].second.get_mpz_t(), row[best].second.get_mpz_t());
        if (cmp < 0) best = static_cast<int>(i);
    }
    for (const auto& [c, v] : row) ++col_count_[c];
    pivots_.push_back(row[best].first);
    rows_.push_back(std::move(row));
    return true;
}

std::vector<ExactRat> SparseEchelon::express(const SparseRow& v) const {
    std::vector<ExactRat> coeffs(rows_.size(), ExactRat(0));
    std::vector<std::pair<int, ExactRat>> rem;
    rem.reserve(v.size());
    for (const auto& [c, val] : v) rem.emplace_back(c, ExactRat(val));
    for (size_t t = 0; t < rows_.size(); ++t) {
        auto it = std::lower_bound(rem.begin(), rem.end(), pivots_[t],
                                   [](const auto& e, int c) { return e.first < c; });
        if (it == rem.end() || it->first != pivots_[t] || it->second == 0) continue;
        const ExactInt* pv = find_col(rows_[t], pivots_[t]);
        ExactRat c = it->second / ExactRat(*pv);
        coeffs[t] = c;
        // rem -= c * rows_[t]
        std::vector<std::pair<int, ExactRat>> nx;
        nx.reserve(rem.size() + rows_[t].size());
        size_t i = 0, j = 0;
        while (i < rem.size() || j < rows_[t].size()) {
            if (j >= rows_[t].size() || (i < rem.size() && rem[i].first < rows_[t][j].first)) {
                nx.push_back(rem[i]);
                ++i;
            } else if (i >= rem.size() || rows_[t][j].first < rem[i].first) {
                nx.emplace_back(rows_[t][j].first, -c * ExactRat(rows_[t][j].second));
                ++j;
            } else {
                ExactRat val = rem[i].second - c * ExactRat(rows_[t][j].second);
                if (val != 0) nx.emplace_back(rem[i].first, std::move(val));
                ++i;
                ++j;
            }
        }
        rem = std::move(nx);
    }
    if (!rem.empty()) throw std::logic_error("express: vector outside the row span");
    return coeffs;
}

bool SparseEchelon::in_span(const SparseRow& v) const { return reduce(v).empty(); }

} // namespace weylmod
