#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "weylmod/exact.hpp"

namespace weylmod {

// Finitely supported map from Z^r content vectors to multiplicities.
// Zero entries are never stored. Character products correspond to
// convolution of tables, which is how the recurrences multiply.
class WeightTable {
public:
    explicit WeightTable(int rank) : rank_(rank) {}
    static WeightTable unit(int rank);

    int rank() const { return rank_; }
    void add(const std::vector<int>& key, const ExactInt& v);
    ExactInt get(const std::vector<int>& key) const;
    const std::map<std::vector<int>, ExactInt>& entries() const { return entries_; }
    size_t support_size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    ExactInt total() const;

    bool operator==(const WeightTable&) const = default;

    // Weyl-group invariance: equal multiplicity on every coordinate
    // permutation of every stored key.
    bool is_symmetric() const;

    WeightTable convolve(const WeightTable& other) const;
    WeightTable convolve_power(int e) const;

    nlohmann::json to_json() const;

private:
    int rank_ = 0;
    std::map<std::vector<int>, ExactInt> entries_;
};

// Entrywise a - b; signed, used for residual checks (zero table expected).
WeightTable table_difference(const WeightTable& a, const WeightTable& b);

} // namespace weylmod
