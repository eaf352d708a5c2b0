#pragma once

#include <string>
#include <vector>

#include "weylmod/exact.hpp"
#include "weylmod/partition.hpp"
#include "weylmod/weight_table.hpp"

namespace weylmod {

// The three coordinate algebras the engine understands, with the
// augmentation given by evaluation at the origin:
//   polynomial(d)    C[x^1..x^d]
//   double_point     C[x,y]/(xy)
//   truncated_line(l) C[x,y]/(x^l)
struct AlgebraPresentation {
    enum class Kind { polynomial, double_point, truncated_line };
    Kind kind = Kind::polynomial;
    int param = 0;  // d for polynomial, l for truncated_line

    static AlgebraPresentation polynomial(int d);
    static AlgebraPresentation double_point();
    static AlgebraPresentation truncated_line(int l);
    static AlgebraPresentation parse(const std::string& spec);  // "poly:d" | "dp" | "xl:l"

    int num_vars() const { return kind == Kind::polynomial ? param : 2; }
    std::string label() const;
    bool operator==(const AlgebraPresentation&) const = default;
    auto operator<=>(const AlgebraPresentation&) const = default;
};

// Module dimension for highest weight n*omega_1 over gl_r; d = number of
// variables, 0..3. The d=3 value is conjectural.
ExactInt dim_weyl(int d, int r, long n);

// Weight multiplicity at content k (sum k_i = n, else 0), d = 1..3.
ExactInt weight_dim(int d, int r, long n, const std::vector<long>& k);

// sl_2 column: multiplicity of the weight n*omega - k*alpha, d = 0..3.
ExactInt sl2_weight_dim(int d, long n, long k);

// The two product presentations P(n), P(k) of the same multiplicity;
// construction asserts P(n)/P(k) equals the closed binomial form.
struct ProductForm {
    ExactInt p_of_n;
    ExactInt p_of_k;
};
ProductForm sl2_product_form(int d, long n, long k);

// Double point: r^n + (n-1) C(r,2) r^{n-2} for n >= 2, r^n for n = 1.
ExactInt double_point_dim(int r, long n);
WeightTable double_point_table(int r, long n);

// dim A/A_eps^n by monomial counting in the presentation.
ExactInt hilbert_nbhd(const AlgebraPresentation& a, long n);

// Truncated Catalan numbers: seeds C_n^(l) = C_n for 1 <= n <= l+1, then
// C_{n+1}^(l) = 2 C_n^(l) + sum_{j=1}^{l-1} C_j C_{n-j}^(l).
ExactInt truncated_catalan(int l, long n);

// Candidate trace on the three-variable coinvariants for a permutation
// with cycle lengths k_i + 1, reading the bracket in the source formula as
// an ordinary binomial: 2^(n-sum k) (n+1)^(n-2-sum k) prod C(2k_i+1, k_i+1).
// That reading is unverified; the value is reported next to computed
// traces and never asserted.
ExactRat d3_trace_candidate(long n, const Partition& cycle_type);

} // namespace weylmod
