#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace homlink {

/* Exact rational scalars. mpq_class keeps the invariants we need (lowest
 * terms, positive denominator, 0 == 0/1) once canonicalized, so every
 * constructor that could produce a non-canonical value goes through rat(). */
using Rational = mpq_class;

inline Rational rat(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

/* True when r is integral (denominator 1). */
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline Rational rat_from_string(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

} // namespace homlink
