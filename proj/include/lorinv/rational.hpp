// Exact rational arithmetic. Thin layer over GMP's mpq_class: construction
// from num/den with canonicalization, gcd/lcm of rationals, integer square
// root tests, deterministic printing.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace lorinv {

using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline int sign(const Rational& r) { return sgn(r); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// gcd on Q: gcd of numerators over lcm of denominators. gcd(0,x) = |x|.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return rational_abs(b);
    if (b == 0) return rational_abs(a);
    BigInt gnum, lden;
    mpz_gcd(gnum.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(lden.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    return make_rational(gnum, lden);
}

// Exact square root when the argument is a perfect square in Q.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    BigInt n = r.get_num(), d = r.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    BigInt sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return make_rational(sn, sd);
}

inline Rational rational_pow(const Rational& r, unsigned e) {
    Rational out(1);
    Rational base = r;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace lorinv
