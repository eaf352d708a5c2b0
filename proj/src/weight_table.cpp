#include "weylmod/weight_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylmod {

WeightTable WeightTable::unit(int rank) {
    WeightTable t(rank);
    t.add(std::vector<int>(rank, 0), 1);
    return t;
}

void WeightTable::add(const std::vector<int>& key, const ExactInt& v) {
    if (static_cast<int>(key.size()) != rank_)
        throw std::invalid_argument("weight table key has wrong rank");
    if (v == 0) return;
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

ExactInt WeightTable::get(const std::vector<int>& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? ExactInt(0) : it->second;
}

ExactInt WeightTable::total() const {
    ExactInt t = 0;
    for (const auto& [k, v] : entries_) t += v;
    return t;
}

bool WeightTable::is_symmetric() const {
    // Adjacent transpositions generate the full permutation group.
    for (const auto& [k, v] : entries_) {
        for (int i = 0; i + 1 < rank_; ++i) {
            if (k[i] == k[i + 1]) continue;
            std::vector<int> kk(k);
            std::swap(kk[i], kk[i + 1]);
            if (get(kk) != v) return false;
        }
    }
    return true;
}

WeightTable WeightTable::convolve(const WeightTable& other) const {
    if (rank_ != other.rank_) throw std::invalid_argument("convolve: rank mismatch");
    WeightTable out(rank_);
    std::vector<int> key(rank_);
    for (const auto& [ka, va] : entries_) {
        for (const auto& [kb, vb] : other.entries_) {
            for (int i = 0; i < rank_; ++i) key[i] = ka[i] + kb[i];
            out.add(key, va * vb);
        }
    }
    return out;
}

WeightTable WeightTable::convolve_power(int e) const {
    if (e < 0) throw std::domain_error("convolve_power: negative exponent");
    WeightTable acc = unit(rank_);
    for (int i = 0; i < e; ++i) acc = acc.convolve(*this);
    return acc;
}

nlohmann::json WeightTable::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [k, v] : entries_)
        entries.push_back({{"k", k}, {"dim", dec(v)}});
    return {{"r", rank_}, {"entries", entries}, {"total", dec(total())}};
}

WeightTable table_difference(const WeightTable& a, const WeightTable& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("table_difference: rank mismatch");
    WeightTable out = a;
    for (const auto& [k, v] : b.entries()) out.add(k, -v);
    return out;
}

} // namespace weylmod
