#pragma once

#include <gmpxx.h>

#include <string>

namespace flagchern {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
/// All residue arithmetic runs on this type; nothing exact is ever rounded.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// q^k for a non-negative exponent.
inline Rational rational_pow(const Rational& q, unsigned long k) {
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(q.get_mpq_t()), k);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(q.get_mpq_t()), k);
    return out;  // powers of a canonical fraction stay canonical
}

/// "p/q", or just "p" when the value is an integer.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace flagchern
