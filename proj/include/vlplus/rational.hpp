#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace vlplus {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// num/den with sign normalization; cpp_rational's two-argument constructor
/// rejects negative denominators, so route all fraction literals through here.
inline Rat ratio(Int num, Int den) {
    if (den == 0) throw std::domain_error("ratio: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline Rat ratio(long num, long den) { return ratio(Int(num), Int(den)); }

Int factorial(unsigned n);

/// Generalized binomial a(a-1)...(a-n+1)/n!, defined for rational a and
/// integer n >= 0. Integer-valued whenever a is an integer.
Rat binom_gen(const Rat& a, long n);
Rat binom_gen(long a, long n);

Int int_pow(const Int& base, unsigned exp);
Rat rat_pow(const Rat& base, long exp);

std::string to_string(const Rat& r);

Int isqrt(const Int& n);
bool is_perfect_square(const Int& n);

}  // namespace vlplus
