#pragma once

#include <gmpxx.h>

#include <string>

#include "perimap/errors.hpp"

namespace perimap {

// Exact rational coefficients. GMP keeps values canonical (reduced,
// positive denominator) for all arithmetic results; only the two-argument
// constructor needs an explicit canonicalize.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }

inline Rat rat(long n, long d) {
    if (d == 0) throw DegenerateError("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat rat_from_decimal(const std::string& digits) {
    // digits: nonempty run of [0-9]
    return Rat(mpz_class(digits, 10));
}

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool rat_is_int(const Rat& r) { return r.get_den() == 1; }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return out;  // base canonical => powers canonical
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Largest absolute value among numerator and denominator; used by the
// heuristic gcd to pick evaluation points.
inline Int rat_height(const Rat& r) {
    Int n = abs(r.get_num());
    Int d = abs(r.get_den());
    return n > d ? n : d;
}

}  // namespace perimap
