#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylmod/exact.hpp"

namespace weylmod {

struct NotPolynomialError : std::runtime_error {
    NotPolynomialError() : std::runtime_error("not polynomial on this grid") {}
};
struct GridTooSmallError : std::runtime_error {
    GridTooSmallError() : std::runtime_error("grid too small") {}
};

struct GridSample {
    std::vector<long> point;
    ExactRat value;
};

// Interpolating polynomial with exact rational coefficients, indexed by
// exponent vector. degrees[i] is the exact degree in variable i.
class FittedPoly {
public:
    FittedPoly(std::vector<std::string> vars,
               std::map<std::vector<int>, ExactRat> coeffs);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<std::vector<int>, ExactRat>& coefficients() const { return coeffs_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int var) const { return degrees_.at(var); }

    ExactRat evaluate(const std::vector<ExactRat>& point) const;
    ExactRat evaluate(const std::vector<long>& point) const;

    std::string str() const;
    nlohmann::json to_json() const;

private:
    std::vector<std::string> vars_;
    std::map<std::vector<int>, ExactRat> coeffs_;  // zero coefficients dropped
    std::vector<int> degrees_;
};

// Newton forward differences on a full rectangular grid of consecutive
// integers. The detected degree must leave at least two vanishing
// difference layers inside the grid (>= degree+3 points per variable);
// one vanishing layer only is reported as "grid too small", none as
// "not polynomial on this grid". A single-point axis fits a constant.
FittedPoly finite_difference_fit(const std::vector<std::string>& variables,
                                 const std::vector<GridSample>& samples);

} // namespace weylmod
