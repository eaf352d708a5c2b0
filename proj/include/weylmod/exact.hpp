#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace weylmod {

// All arithmetic in this project is exact. Integers are GMP bigints and
// rationals are GMP rationals kept canonical (gcd(num,den)=1, den>0).
using ExactInt = mpz_class;
using ExactRat = mpq_class;

inline ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    ExactRat q(num, den);
    q.canonicalize();
    return q;
}

// Exact quotient; throws if den does not divide num. Division failures in
// the closed-form formulas indicate a transcription bug, so callers let
// this escape and abort the computation loudly.
ExactInt exact_div(const ExactInt& num, const ExactInt& den);

ExactInt binomial(long n, long k);
ExactInt factorial(long n);
ExactInt pow_int(const ExactInt& base, long e);

// C(2n,n)/(n+1); n < 0 is a domain error.
ExactInt catalan(long n);

std::string dec(const ExactInt& v);
std::string dec(const ExactRat& v);

inline bool is_integral(const ExactRat& q) { return q.get_den() == 1; }

} // namespace weylmod
