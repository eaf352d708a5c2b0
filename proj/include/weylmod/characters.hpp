#pragma once

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "weylmod/exact.hpp"
#include "weylmod/parking.hpp"
#include "weylmod/partition.hpp"
#include "weylmod/weight_table.hpp"

namespace weylmod {

// Degree-n symmetric function in the power-sum basis; coefficients indexed
// by cycle type.
struct SymFuncPS {
    int degree = 0;
    std::map<Partition, ExactRat> p_coeffs;

    nlohmann::json to_json() const;
    bool operator==(const SymFuncPS&) const = default;
};

enum class TableMethod { enumerate, recurrence };

// One-variable model: tensor product of fundamental tables. lambda lists
// the multiplicities of omega_1..omega_r; the i-th fundamental table is
// the i-th exterior power of the vector representation (0/1 contents with
// i ones).
WeightTable c1_weight_table(int r, const std::vector<long>& lambda);

// Two-variable model at rank r: subset counts by content for m = xi^t.
WeightTable c2_weight_table(int r, const Partition& xi);

// Same table assembled from the boundary-point split recurrence; memoized.
WeightTable c2_recurrence(int r, const Partition& xi);

// Difference between the two sides of the second character recurrence at a
// row k with xi_k - xi_{k+1} > 1 (1-based, k < r); contract: zero table.
WeightTable rec_ii_residual(int r, const Partition& xi, int k);

// Truncated family: boundary points required in every window of length l.
WeightTable cl_weight_table(int r, const Partition& xi, int l,
                            TableMethod method = TableMethod::enumerate);

// ch = sum over cycle types of trace/z_mu * p_mu, traces counted on PF(m)
// (optionally truncated), with or without the sign twist.
SymFuncPS frobenius_char(const CapacityVector& m, bool sign_twist,
                         std::optional<int> l = std::nullopt, long budget = kDefaultBudget);

// Coefficients <f, s_lambda> via symmetric-group characters. Throws on a
// non-integer coefficient.
std::map<Partition, ExactInt> schur_expand(const SymFuncPS& f);

// chi^lambda(mu) by the border-strip recursion; memoized.
ExactInt symmetric_group_character(const Partition& lambda, const Partition& mu);

// Weight table of the degree-n character with the given traces, restricted
// to rank r: the p-expansion evaluated in r variables, equivalently the
// dimensions of Young-subgroup invariants. Multiplicities are checked to
// be nonnegative integers.
WeightTable weight_table_from_traces(const std::map<Partition, ExactInt>& traces, int n, int r);

// z_mu = prod i^{a_i} a_i! for mu with a_i parts equal to i
ExactInt cycle_type_centralizer(const Partition& mu);

} // namespace weylmod
