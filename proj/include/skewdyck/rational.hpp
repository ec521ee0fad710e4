#ifndef SKEWDYCK_RATIONAL_HPP
#define SKEWDYCK_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace skewdyck {

using BigInt = mpz_class;
using Rational = mpq_class;

// Canonical reduced fraction with positive denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline const BigInt& numerator(const Rational& q) { return q.get_num(); }
inline const BigInt& denominator(const Rational& q) { return q.get_den(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline BigInt to_integer(const Rational& q) {
    if (!is_integer(q)) {
        throw std::domain_error("to_integer: not an integer: " + q.get_str());
    }
    return q.get_num();
}

}  // namespace skewdyck

#endif
