#ifndef DFSING_RATIONAL_HPP
#define DFSING_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "dfsing/errors.hpp"

namespace dfsing {

// Exact rational arithmetic. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// as long as values are built through make_rational / arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw StructuralError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rat_pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r; // canonical: powers of coprime pairs stay coprime
}

inline Integer factorial(unsigned long k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace dfsing

#endif
