#pragma once

#include "vlplus/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace vlplus {

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i; the zero
/// polynomial carries an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Rat& c) { return Poly({c}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }
    static Poly monomial(int degree, const Rat& coeff);
    /// prod (x - root_i), scaled by lead.
    static Poly from_roots(const std::vector<Rat>& roots, const Rat& lead);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& lead() const;
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat operator()(const Rat& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a) { return a *= Rat(-1); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly monic() const;

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rat> c_;
    void trim();
};

/// Quotient and remainder with deg(rem) < deg(b); exact over Q.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

struct BezoutResult {
    Poly gcd;  // monic
    Poly u;
    Poly v;  // u*f + v*g == gcd
};

/// Extended Euclid over Q; throws if both inputs are zero.
BezoutResult poly_gcd_bezout(const Poly& f, const Poly& g);

}  // namespace vlplus
