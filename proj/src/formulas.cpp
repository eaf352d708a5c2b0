#include "weylmod/formulas.hpp"

#include <functional>
#include <numeric>

namespace weylmod {

AlgebraPresentation AlgebraPresentation::polynomial(int d) {
    if (d < 0) throw std::invalid_argument("polynomial algebra needs d >= 0");
    return {Kind::polynomial, d};
}
AlgebraPresentation AlgebraPresentation::double_point() { return {Kind::double_point, 0}; }
AlgebraPresentation AlgebraPresentation::truncated_line(int l) {
    if (l < 1) throw std::invalid_argument("truncated line needs l >= 1");
    return {Kind::truncated_line, l};
}

AlgebraPresentation AlgebraPresentation::parse(const std::string& spec) {
    if (spec == "dp" || spec == "doublepoint") return double_point();
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string head = spec.substr(0, colon);
        const int v = std::stoi(spec.substr(colon + 1));
        if (head == "poly") return polynomial(v);
        if (head == "xl") return truncated_line(v);
    }
    throw std::invalid_argument("unknown algebra spec '" + spec + "' (use poly:d, dp, xl:l)");
}

std::string AlgebraPresentation::label() const {
    switch (kind) {
        case Kind::polynomial: return "poly:" + std::to_string(param);
        case Kind::double_point: return "dp";
        case Kind::truncated_line: return "xl:" + std::to_string(param);
    }
    return "?";
}

ExactInt dim_weyl(int d, int r, long n) {
    if (n < 0) throw std::domain_error("dim_weyl: n must be >= 0");
    if (r < 1) throw std::domain_error("dim_weyl: r must be >= 1");
    switch (d) {
        case 0: return binomial(n + r, r);
        case 1: return pow_int(ExactInt(r), n);
        case 2: return exact_div(binomial(static_cast<long>(r) * (n + 1), n), ExactInt(n + 1));
        case 3:
            if (n == 0) return 1;  // formula degenerates; the module is trivial
            return exact_div(ExactInt(r) * binomial((2L * r - 1) * (n + 1), n - 1),
                             binomial(n + 1, 2));
        default: throw std::domain_error("dim_weyl: d must be 0..3");
    }
}

ExactInt weight_dim(int d, int r, long n, const std::vector<long>& k) {
    if (static_cast<int>(k.size()) != r) throw std::invalid_argument("weight_dim: content length != r");
    long sum = 0;
    for (long ki : k) {
        if (ki < 0) return 0;
        sum += ki;
    }
    if (sum != n) return 0;
    switch (d) {
        case 1: {
            ExactInt v = factorial(n);
            for (long ki : k) v = exact_div(v, factorial(ki));
            return v;
        }
        case 2: {
            ExactInt v = 1;
            for (long ki : k) v *= binomial(n + 1, ki);
            return exact_div(v, ExactInt(n + 1));
        }
        case 3: {
            // 2^r (n+1)^{r-2} prod C(2(n+1)-k_i, k_i) / (2(n+1)-k_i);
            // the r = 1 case carries a negative power of n+1, so the whole
            // product is assembled as a rational and checked integral.
            ExactRat v = make_rat(pow_int(ExactInt(2), r), 1);
            if (r >= 2) v *= make_rat(pow_int(ExactInt(n + 1), r - 2), 1);
            else v /= make_rat(ExactInt(n + 1), 1);
            for (long ki : k) {
                const long c = 2 * (n + 1) - ki;
                v *= make_rat(binomial(c, ki), ExactInt(c));
            }
            if (!is_integral(v)) throw std::logic_error("weight_dim d=3: non-integral value");
            return v.get_num();
        }
        default: throw std::domain_error("weight_dim: d must be 1..3");
    }
}

ExactInt sl2_weight_dim(int d, long n, long k) {
    if (n < 0 || k < 0) throw std::domain_error("sl2_weight_dim: need n, k >= 0");
    switch (d) {
        case 0: return k <= n ? 1 : 0;
        case 1: return binomial(n, k);
        case 2: return exact_div(binomial(n + 1, k) * binomial(n + 1, n - k), ExactInt(n + 1));
        case 3: {
            ExactInt num = binomial(n + k + 2, 2 * k + 1) * binomial(2 * n - k + 1, k);
            return exact_div(num, ExactInt(k + 1) * ExactInt(n + k + 2));
        }
        default: throw std::domain_error("sl2_weight_dim: d must be 0..3");
    }
}

namespace {

ExactInt range_product(long lo, long hi, const std::function<long(long)>& term) {
    ExactInt v = 1;
    for (long i = lo; i <= hi; ++i) v *= term(i);
    return v;
}

ExactInt sl2_product(int d, long n, long k) {
    switch (d) {
        case 0: return 1;
        case 1: return range_product(0, k - 1, [&](long i) { return n - i; });
        case 2:
            return range_product(-1, k - 2, [&](long i) { return n - i; }) *
                   range_product(0, k - 1, [&](long i) { return n - i; });
        case 3:
            return range_product(2, 2 * k + 1, [&](long i) { return n + i - k; }) *
                   range_product(-1, k - 2, [&](long i) { return 2 * n - i - k; });
        default: throw std::domain_error("sl2_product_form: d must be 0..3");
    }
}

} // namespace

ProductForm sl2_product_form(int d, long n, long k) {
    ProductForm pf{sl2_product(d, n, k), sl2_product(d, k, k)};
    if (pf.p_of_k == 0) throw std::logic_error("sl2_product_form: P(k) vanishes");
    if (exact_div(pf.p_of_n, pf.p_of_k) != sl2_weight_dim(d, n, k))
        throw std::logic_error("sl2_product_form: P(n)/P(k) disagrees with the closed form");
    return pf;
}

ExactInt double_point_dim(int r, long n) {
    if (n < 1) throw std::domain_error("double_point_dim: n must be >= 1");
    ExactInt v = pow_int(ExactInt(r), n);
    if (n >= 2) v += ExactInt(n - 1) * binomial(r, 2) * pow_int(ExactInt(r), n - 2);
    return v;
}

WeightTable double_point_table(int r, long n) {
    if (n < 1) throw std::domain_error("double_point_table: n must be >= 1");
    WeightTable vec(r);
    for (int i = 0; i < r; ++i) {
        std::vector<int> key(r, 0);
        key[i] = 1;
        vec.add(key, 1);
    }
    WeightTable out = vec.convolve_power(static_cast<int>(n));
    if (n >= 2) {
        WeightTable wedge(r);
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                std::vector<int> key(r, 0);
                key[i] = key[j] = 1;
                wedge.add(key, 1);
            }
        WeightTable extra = wedge.convolve(vec.convolve_power(static_cast<int>(n) - 2));
        for (const auto& [kk, vv] : extra.entries()) out.add(kk, ExactInt(n - 1) * vv);
    }
    return out;
}

ExactInt hilbert_nbhd(const AlgebraPresentation& a, long n) {
    if (n < 0) throw std::domain_error("hilbert_nbhd: n must be >= 0");
    switch (a.kind) {
        case AlgebraPresentation::Kind::polynomial:
            // monomials of total degree < n in d variables
            return binomial(n + a.param - 1, a.param);
        case AlgebraPresentation::Kind::double_point:
            // 1 together with x^a, y^a for 1 <= a < n
            return n == 0 ? 0 : ExactInt(2 * n - 1);
        case AlgebraPresentation::Kind::truncated_line: {
            // x^a y^b with a < l and a + b < n
            ExactInt cnt = 0;
            for (long x = 0; x < std::min<long>(a.param, n); ++x) cnt += n - x;
            return cnt;
        }
    }
    throw std::logic_error("hilbert_nbhd: unsupported presentation");
}

ExactRat d3_trace_candidate(long n, const Partition& cycle_type) {
    if (cycle_type.sum() != n) throw std::invalid_argument("cycle type must partition n");
    long drop = 0;  // sum of k_i over cycles of length k_i + 1
    ExactInt prod = 1;
    for (int c : cycle_type.parts()) {
        const long k = c - 1;
        drop += k;
        prod *= binomial(2 * k + 1, k + 1);
    }
    ExactRat v = make_rat(pow_int(ExactInt(2), n - drop) * prod, 1);
    const long e = n - 2 - drop;
    if (e >= 0) v *= make_rat(pow_int(ExactInt(n + 1), e), 1);
    else v /= make_rat(pow_int(ExactInt(n + 1), -e), 1);
    return v;
}

ExactInt truncated_catalan(int l, long n) {
    if (l < 1 || n < 1) throw std::domain_error("truncated_catalan: need l >= 1, n >= 1");
    if (n <= l + 1) return catalan(n);
    std::vector<ExactInt> c(n + 1);
    for (long i = 1; i <= l + 1; ++i) c[i] = catalan(i);
    for (long i = l + 1; i < n; ++i) {
        ExactInt v = 2 * c[i];
        for (int j = 1; j < l; ++j) v += catalan(j) * c[i - j];
        c[i + 1] = v;
    }
    return c[n];
}

} // namespace weylmod
