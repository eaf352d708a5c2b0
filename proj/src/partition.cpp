#include "weylmod/partition.hpp"

#include <numeric>

namespace weylmod {

void Partition::normalize() {
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    if (!parts_.empty() && parts_.back() < 0)
        throw std::invalid_argument("partition parts must be nonnegative");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int r) const {
    if (length() > r)
        throw std::invalid_argument("partition has more than r parts");
    std::vector<int> out(parts_);
    out.resize(r, 0);
    return out;
}

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> t(parts_.front(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::pair<Partition, Partition> split_at(const Partition& xi, int i) {
    if (i < 0 || i > xi.first())
        throw std::domain_error("split_at: index outside [0, xi_1]");
    std::vector<int> hi, lo;
    for (int p : xi.parts()) {
        hi.push_back(std::max(p - i, 0));
        lo.push_back(std::min(p, i));
    }
    return {Partition(std::move(hi)), Partition(std::move(lo))};
}

Partition shift_cell_to_first_column(const Partition& xi) {
    if (xi.empty()) throw std::domain_error("shift_cell_to_first_column: empty partition");
    const int width = xi.first();
    std::vector<int> t = xi.transpose().padded(width);
    if (width > 1) {
        t[0] += 1;
        t[width - 1] -= 1;
    }
    return Partition(std::move(t)).transpose();  // constructor asserts shape validity
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Partition> partitions_up_to(int max_sum) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_sum; ++n) {
        auto pn = partitions_of(n);
        out.insert(out.end(), pn.begin(), pn.end());
    }
    return out;
}

} // namespace weylmod
