#pragma once

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "weylmod/exact.hpp"
#include "weylmod/partition.hpp"
#include "weylmod/weight_table.hpp"

namespace weylmod {

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long kDefaultBudget = 100000000L;  // candidate evaluations

// Lot capacities m_1..m_N; |m| cars park into sum(m) spaces.
struct CapacityVector {
    std::vector<int> caps;

    CapacityVector() = default;
    CapacityVector(std::initializer_list<int> c) : caps(c) { validate(); }
    explicit CapacityVector(std::vector<int> c) : caps(std::move(c)) { validate(); }

    int lots() const { return static_cast<int>(caps.size()); }
    int total() const;
    std::vector<int> prefix_sums() const;  // index s -> m_1+..+m_s, s = 0..N

    bool operator==(const CapacityVector&) const = default;
    auto operator<=>(const CapacityVector&) const = default;

private:
    void validate() const;
};

using ParkingFunction = std::vector<int>;  // length |m|, values 1..N

// Prefix-count characterization of membership in PF(m).
bool is_parking(const ParkingFunction& f, const CapacityVector& m);

// Car-by-car simulation: each car drives to its preferred lot and takes the
// first space at or after it. Must agree with is_parking; tests compare the
// two routes exhaustively.
bool parks_by_simulation(const ParkingFunction& f, const CapacityVector& m);

// Positions 1 <= s < N where the prefix inequality is an equality.
std::set<int> boundary_points(const ParkingFunction& f, const CapacityVector& m);

// Member of the truncated family: every window [s+1, s+l], 0 <= s < N-l,
// contains a boundary point.
bool truncated_member(const ParkingFunction& f, const CapacityVector& m, int l);

// Exact |PF(m)| (or |PF(m)^(l)| when l is set). Candidate space N^|m| is
// guarded by the budget; partitions on the first preference value across
// workers, combined in index order.
ExactInt count_parking(const CapacityVector& m, std::optional<int> l = std::nullopt,
                       long budget = kDefaultBudget, int jobs = 0);

// Lexicographic streaming of members (single-threaded).
void for_each_parking(const CapacityVector& m,
                      const std::function<void(const ParkingFunction&)>& fn,
                      std::optional<int> l = std::nullopt, long budget = kDefaultBudget);

// Dual model: |m|-element subsets of {1..r} x {1..N} with given row contents.
struct SubsetH {
    int rank = 0;
    std::vector<std::pair<int, int>> cells;  // (row, column), rows 1..r

    std::vector<int> content() const;  // per-row cell counts
};

bool subset_satisfies(const SubsetH& h, const CapacityVector& m);
std::set<int> boundary_points(const SubsetH& h, const CapacityVector& m);
bool subset_truncated_member(const SubsetH& h, const CapacityVector& m, int l);

// Full table of subset counts by row content, computed by a column DP
// (columns beyond N cannot occur: the prefix bound at s = N forces every
// cell into columns 1..N). l = 0 disables truncation.
WeightTable subset_content_table(const CapacityVector& m, int r, int l = 0);

// Count for one content vector; sum(k) must equal |m|.
ExactInt count_subsets(const CapacityVector& m, int r, const std::vector<int>& k, int l = 0);

// The unique k in 1..n+1 such that relabeling preferences by the k-th power
// of the cyclic rotation turns f : {1..n} -> {1..n+1} into a parking-type
// function; located at the minimizer of F(s) = |f^{-1}({1..s})| - ns/(n+1).
int cycle_shift_index(const ParkingFunction& f);

// Number of members of PF(m) (or PF(m)^(l)) fixed by a permutation of the
// given cycle type, optionally multiplied by the permutation's sign.
ExactInt perm_trace(const CapacityVector& m, const Partition& cycle_type, bool sign_twist,
                    std::optional<int> l = std::nullopt, long budget = kDefaultBudget);

} // namespace weylmod
