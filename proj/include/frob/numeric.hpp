#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "frob/errors.hpp"

namespace frob {

// Exact arbitrary-precision integer and rational types. Every quantity a
// query can return is a ZZ; QQ appears only inside evaluators whose
// intermediate values are fractional before they collapse to integers.
using ZZ = mpz_class;
using QQ = mpq_class;

/// Canonical rational num/den (reduced, positive denominator).
inline QQ make_rational(const ZZ& num, const ZZ& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    QQ q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const QQ& q) { return q.get_den() == 1; }

/// Exact QQ -> ZZ conversion; refuses non-integral values.
inline ZZ to_integer(const QQ& q) {
    if (!is_integral(q))
        throw InternalInconsistencyError("expected integral value, got " +
                                         q.get_str());
    return q.get_num();
}

inline ZZ pow_zz(const ZZ& base, unsigned long exp) {
    ZZ r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline ZZ binomial(unsigned long n, unsigned long k) {
    ZZ r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline ZZ factorial(unsigned long n) {
    ZZ r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Plain decimal string, no exponent notation at any magnitude.
inline std::string to_decimal(const ZZ& v) { return v.get_str(); }

}  // namespace frob
