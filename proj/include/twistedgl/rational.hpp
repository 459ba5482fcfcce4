#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "error.hpp"

namespace tgl {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Serialized as "a/b", or "a" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) fail(ErrorKind::Parse, "not a rational literal: '" + s + "'");
    if (r.get_den() == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

/// base^e for any integer e; base must be nonzero when e < 0.
inline Rational rpow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Integer num, den;
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), a);
    if (e < 0) {
        if (num == 0) fail(ErrorKind::OutOfRange, "negative power of zero");
        std::swap(num, den);
    }
    return make_rational(num, den);
}

inline Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Integer binomial(const Integer& n, unsigned long k) {
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace tgl
