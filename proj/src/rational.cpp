#include "vlplus/rational.hpp"

#include <sstream>

namespace vlplus {

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Rat binom_gen(const Rat& a, long n) {
    if (n < 0) throw std::invalid_argument("binom_gen: negative lower index");
    Rat num = 1;
    for (long i = 0; i < n; ++i) num *= a - i;
    return num / Rat(factorial(static_cast<unsigned>(n)));
}

Rat binom_gen(long a, long n) { return binom_gen(Rat(a), n); }

Int int_pow(const Int& base, unsigned exp) {
    Int r = 1;
    Int b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: negative power of zero");
        return Rat(1) / rat_pow(base, -exp);
    }
    Rat r = 1;
    Rat b = base;
    while (exp > 0) {
        if (exp & 1l) r *= b;
        b *= b;
        exp >>= 1l;
    }
    return r;
}

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    if (n == 0) return 0;
    Int lo = 1, hi = n;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (mid * mid <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

}  // namespace vlplus
