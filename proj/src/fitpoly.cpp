#include "weylmod/fitpoly.hpp"

#include <algorithm>

namespace weylmod {

FittedPoly::FittedPoly(std::vector<std::string> vars,
                       std::map<std::vector<int>, ExactRat> coeffs)
    : vars_(std::move(vars)), degrees_(vars_.size(), 0) {
    for (auto& [e, c] : coeffs) {
        if (e.size() != vars_.size())
            throw std::invalid_argument("exponent vector has wrong arity");
        if (c == 0) continue;
        for (size_t i = 0; i < e.size(); ++i)
            degrees_[i] = std::max(degrees_[i], e[i]);
        coeffs_.emplace(e, c);
    }
}

ExactRat FittedPoly::evaluate(const std::vector<ExactRat>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("evaluate: wrong point arity");
    ExactRat acc = 0;
    for (const auto& [e, c] : coeffs_) {
        ExactRat term = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) term *= point[i];
        acc += term;
    }
    return acc;
}

ExactRat FittedPoly::evaluate(const std::vector<long>& point) const {
    std::vector<ExactRat> p;
    p.reserve(point.size());
    for (long x : point) p.emplace_back(ExactInt(x));
    return evaluate(p);
}

std::string FittedPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += " + ";
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) s += dec(c);
        else if (c == 1) s += mono;
        else s += dec(c) + "*" + mono;
    }
    return s;
}

nlohmann::json FittedPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : coeffs_)
        terms.push_back({{"exp", e}, {"coef", dec(c)}});
    return {{"variables", vars_}, {"terms", terms}, {"degrees", degrees_}};
}

namespace {

struct Grid {
    std::vector<long> lo;          // per-variable minimum
    std::vector<size_t> extent;    // per-variable point count
    std::vector<ExactRat> values;  // row-major, last variable fastest
};

Grid assemble_grid(size_t nvars, const std::vector<GridSample>& samples) {
    if (samples.empty()) throw std::invalid_argument("no samples");
    Grid g;
    g.lo.assign(nvars, 0);
    std::vector<long> hi(nvars, 0);
    for (size_t v = 0; v < nvars; ++v) {
        g.lo[v] = hi[v] = samples.front().point.at(v);
    }
    for (const auto& s : samples) {
        if (s.point.size() != nvars) throw std::invalid_argument("sample arity mismatch");
        for (size_t v = 0; v < nvars; ++v) {
            g.lo[v] = std::min(g.lo[v], s.point[v]);
            hi[v] = std::max(hi[v], s.point[v]);
        }
    }
    size_t cells = 1;
    g.extent.resize(nvars);
    for (size_t v = 0; v < nvars; ++v) {
        g.extent[v] = static_cast<size_t>(hi[v] - g.lo[v] + 1);
        cells *= g.extent[v];
    }
    if (cells != samples.size())
        throw std::invalid_argument("samples do not form a full rectangular grid");
    g.values.assign(cells, ExactRat(0));
    std::vector<bool> seen(cells, false);
    for (const auto& s : samples) {
        size_t idx = 0;
        for (size_t v = 0; v < nvars; ++v)
            idx = idx * g.extent[v] + static_cast<size_t>(s.point[v] - g.lo[v]);
        if (seen[idx]) throw std::invalid_argument("duplicate sample point");
        seen[idx] = true;
        g.values[idx] = s.value;
    }
    return g;
}

// In-place mixed forward differences: cell j ends up holding the Newton
// coefficient (iterated corner difference) for multi-index j.
void newton_tensor(Grid& g) {
    const size_t nvars = g.extent.size();
    std::vector<size_t> stride(nvars, 1);
    for (size_t v = nvars; v-- > 1;) stride[v - 1] = stride[v] * g.extent[v];
    for (size_t v = 0; v < nvars; ++v) {
        const size_t m = g.extent[v];
        const size_t st = stride[v];
        // iterate over all lines along axis v
        const size_t total = g.values.size();
        for (size_t base = 0; base < total; ++base) {
            size_t coord = (base / st) % m;
            if (coord != 0) continue;
            for (size_t order = 1; order < m; ++order)
                for (size_t i = m - 1; i >= order; --i)
                    g.values[base + i * st] -= g.values[base + (i - 1) * st];
        }
    }
}

// coefficients of binomial(x - a, j) in powers of x
std::vector<ExactRat> falling_binomial_coeffs(long a, int j) {
    std::vector<ExactRat> c{ExactRat(1)};
    for (int t = 0; t < j; ++t) {
        // multiply by (x - a - t)
        std::vector<ExactRat> nx(c.size() + 1, ExactRat(0));
        ExactRat shift(ExactInt(-(a + t)));
        for (size_t i = 0; i < c.size(); ++i) {
            nx[i + 1] += c[i];
            nx[i] += c[i] * shift;
        }
        c = std::move(nx);
    }
    ExactRat fct(1);
    for (int t = 2; t <= j; ++t) fct *= t;
    for (auto& x : c) x /= fct;
    return c;
}

} // namespace

FittedPoly finite_difference_fit(const std::vector<std::string>& variables,
                                 const std::vector<GridSample>& samples) {
    const size_t nvars = variables.size();
    Grid g = assemble_grid(nvars, samples);
    newton_tensor(g);

    std::vector<size_t> stride(nvars, 1);
    for (size_t v = nvars; v-- > 1;) stride[v - 1] = stride[v] * g.extent[v];

    std::vector<int> dmax(nvars, 0);
    for (size_t idx = 0; idx < g.values.size(); ++idx) {
        if (g.values[idx] == 0) continue;
        for (size_t v = 0; v < nvars; ++v)
            dmax[v] = std::max(dmax[v], static_cast<int>((idx / stride[v]) % g.extent[v]));
    }
    for (size_t v = 0; v < nvars; ++v) {
        if (g.extent[v] == 1) continue;  // single-point axis: constant
        if (dmax[v] + 1 >= static_cast<int>(g.extent[v])) throw NotPolynomialError();
    }
    for (size_t v = 0; v < nvars; ++v) {
        if (g.extent[v] == 1) continue;
        if (dmax[v] + 2 >= static_cast<int>(g.extent[v])) throw GridTooSmallError();
    }

    // Expand the Newton form into monomial coefficients.
    std::map<std::vector<int>, ExactRat> coeffs;
    std::vector<std::vector<std::vector<ExactRat>>> binom_polys(nvars);
    for (size_t v = 0; v < nvars; ++v)
        for (int j = 0; j <= dmax[v]; ++j)
            binom_polys[v].push_back(falling_binomial_coeffs(g.lo[v], j));

    for (size_t idx = 0; idx < g.values.size(); ++idx) {
        if (g.values[idx] == 0) continue;
        std::vector<int> j(nvars);
        for (size_t v = 0; v < nvars; ++v)
            j[v] = static_cast<int>((idx / stride[v]) % g.extent[v]);
        // tensor product of the 1-d binomial polynomials, scaled by N[j]
        std::map<std::vector<int>, ExactRat> term{{std::vector<int>(nvars, 0), g.values[idx]}};
        for (size_t v = 0; v < nvars; ++v) {
            std::map<std::vector<int>, ExactRat> nx;
            const auto& poly = binom_polys[v][j[v]];
            for (const auto& [e, c] : term)
                for (size_t p = 0; p < poly.size(); ++p) {
                    if (poly[p] == 0) continue;
                    std::vector<int> e2(e);
                    e2[v] += static_cast<int>(p);
                    nx[e2] += c * poly[p];
                }
            term = std::move(nx);
        }
        for (const auto& [e, c] : term) coeffs[e] += c;
    }

    return FittedPoly(variables, std::move(coeffs));
}

} // namespace weylmod
