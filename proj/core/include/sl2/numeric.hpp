#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sl2 {

// Exact arithmetic carriers for everything in this library. GMP keeps
// integers in sign-magnitude form with a canonical zero, and mpq_class
// values stay reduced with a positive denominator as long as inputs are
// canonical (all constructors below canonicalize).
using Integer = mpz_class;
using Rational = mpq_class;

// mpz_class has no long long constructor; long is 64-bit on the platforms
// this builds for.
inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Integer& n) { return n.get_str(); }

inline std::string to_string(const Rational& r) {
    return is_integral(r) ? r.get_num().get_str() : r.get_str();
}

inline Integer int_from_string(const std::string& s) { return Integer(s); }

using IntSeq = std::vector<Integer>;

} // namespace sl2
