#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylmod {

// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
// stripped on construction; contexts that need a fixed gl_r length use
// padded(r). Doubles as a dominant gl_r weight and as a capacity vector
// through transpose().
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> p) : parts_(p) { normalize(); }
    explicit Partition(std::vector<int> p) : parts_(std::move(p)) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int sum() const;
    int first() const { return parts_.empty() ? 0 : parts_.front(); }
    // 0-based; parts beyond length read as 0
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    std::vector<int> padded(int r) const;

    Partition transpose() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string str() const;

private:
    void normalize();
    std::vector<int> parts_;
};

// (xi_{>i}, xi_{<=i}): entrywise max(xi_j - i, 0) and min(xi_j, i).
// i must lie in [0, xi_1].
std::pair<Partition, Partition> split_at(const Partition& xi, int i);

// Moves one cell from the rightmost column of the diagram to the first
// column (on the transpose: first entry grows by 1, entry xi_1 shrinks
// by 1; identity when xi_1 = 1). The resulting shape indexes the
// boundary-point-free parking configurations in the character recurrence.
Partition shift_cell_to_first_column(const Partition& xi);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int max_sum);

} // namespace weylmod
