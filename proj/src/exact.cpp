#include "weylmod/exact.hpp"

namespace weylmod {

ExactInt exact_div(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw std::logic_error("exact_div: zero divisor");
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("exact_div: " + num.get_str() + " not divisible by " + den.get_str());
    ExactInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

ExactInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

ExactInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

ExactInt pow_int(const ExactInt& base, long e) {
    if (e < 0) throw std::domain_error("pow_int: negative exponent");
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

ExactInt catalan(long n) {
    if (n < 0) throw std::domain_error("catalan: negative index");
    return exact_div(binomial(2 * n, n), ExactInt(n + 1));
}

std::string dec(const ExactInt& v) { return v.get_str(); }

std::string dec(const ExactRat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

} // namespace weylmod
