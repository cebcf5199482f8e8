#pragma once

#include "vlplus/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace vlplus {

/// A basis monomial a(-n1)...a(-nr)|0> of the Heisenberg Fock space M(1),
/// stored as its level multiset sorted descending (n1 >= ... >= nr >= 1).
class HeisMonomial {
public:
    HeisMonomial() = default;
    explicit HeisMonomial(std::vector<int> levels);

    const std::vector<int>& levels() const { return levels_; }
    int weight() const;
    int length() const { return static_cast<int>(levels_.size()); }
    int parity() const { return levels_.size() % 2 == 0 ? +1 : -1; }

    int count(int n) const;
    HeisMonomial with_level(int n) const;
    HeisMonomial without_level(int n) const;  // removes one copy; n must be present

    auto operator<=>(const HeisMonomial&) const = default;

    std::string str() const;

private:
    std::vector<int> levels_;
};

/// Exact rational combination of Heisenberg monomials: an element of M(1).
/// Terms with zero coefficient are never stored.
class FockVector {
public:
    FockVector() = default;
    static FockVector vacuum() { return monomial(HeisMonomial{}); }
    static FockVector monomial(const HeisMonomial& m, const Rat& c = Rat(1));

    void add(const HeisMonomial& m, const Rat& c);
    const std::map<HeisMonomial, Rat>& terms() const { return terms_; }
    Rat coeff(const HeisMonomial& m) const;
    bool is_zero() const { return terms_.empty(); }

    bool is_homogeneous() const;
    int weight() const;  // of a homogeneous nonzero vector; throws otherwise
    std::vector<int> weights() const;
    FockVector component(int weight) const;

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector& operator*=(const Rat& c);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(FockVector a, const Rat& c) { return a *= c; }
    friend FockVector operator*(const Rat& c, FockVector a) { return a *= c; }
    friend FockVector operator-(FockVector a) { return a *= Rat(-1); }
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    std::map<HeisMonomial, Rat> terms_;
};

/// Heisenberg mode action on M(1) with [a(m), a(n)] = 2km delta_{m+n,0}:
/// n < 0 creates, n > 0 annihilates, n = 0 kills (zero momentum).
FockVector apply_alpha(int n, const FockVector& v, int k);

/// Mode u_n of Y(u,z) = sum u_n z^{-n-1} for homogeneous u in M(1), acting on
/// w in M(1). Built from the normal-ordered product of the derivative fields
/// d^(m-1) a(z) attached to the levels of u.
FockVector heis_vertex_mode(const FockVector& u, const Rat& n, const FockVector& w, int k);

/// Elementary Schur polynomial state p_j(c a) = p_j(c a(-1), c a(-2), ...)|0>,
/// the z^j coefficient of exp(sum_{n>=1} c a(-n) z^n / n).
FockVector schur_p(int j, const Rat& c);
/// q_j = p_j(x) + p_j(-x).
FockVector schur_q(int j, const Rat& c);

/// Projection onto the (sign)-eigenspace of the parity involution theta.
FockVector theta_project(const FockVector& v, int sign);

FockVector vacuum_state();
/// omega = (1/4k) a(-1)^2 |0>, the conformal vector in the alpha basis.
FockVector omega_state(int k);
/// J = (1/4k^2) a(-1)^4 |0> - (1/k) a(-3)a(-1)|0> + (3/4k) a(-2)^2 |0>.
FockVector j_state(int k);

/// All partitions of `weight` as monomials, in descending lexicographic order
/// (matching the printed basis order of weight-graded pieces of M(1)).
std::vector<HeisMonomial> heis_partitions(int weight);

namespace detail {

/// One mode of the normal-ordered operator
///   [prod_i d^(l_i - 1) a(z)] E^-(-m a, z) E^+(-m a, z) e_{m a} z^{2 k m s}
/// applied to a single monomial sitting at momentum label s. `mode` selects
/// the z^{-mode-1} coefficient. Output terms live at label s + m; only the
/// monomial part is returned. charge = 0 recovers the plain M(1) case (the
/// exponential factors collapse and the zero mode reads 2ks = momentum).
std::map<HeisMonomial, Rat> untwisted_mode_term(const std::vector<int>& factor_levels,
                                                long charge, const HeisMonomial& target,
                                                const Rat& label, const Rat& mode, int k);

/// Partitions of n into parts >= 1 (n = 0 gives the empty partition).
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace detail

}  // namespace vlplus
