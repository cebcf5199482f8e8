#pragma once

#include "vlplus/fock.hpp"
#include "vlplus/lattice.hpp"
#include "vlplus/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace vlplus {

/// Monomial a(-n1)...a(-nr) t over a twisted top vector, with levels in the
/// half-odd integers. Levels are stored doubled (odd positive ints, sorted
/// descending) to keep the arithmetic integral.
class TwistedMonomial {
public:
    TwistedMonomial() = default;
    explicit TwistedMonomial(std::vector<int> doubled_levels);

    const std::vector<int>& doubled_levels() const { return dlevels_; }
    Rat weight_above_top() const;
    int length() const { return static_cast<int>(dlevels_.size()); }
    int parity() const { return dlevels_.size() % 2 == 0 ? +1 : -1; }

    int count(int dlevel) const;
    TwistedMonomial with_dlevel(int dlevel) const;
    TwistedMonomial without_dlevel(int dlevel) const;

    auto operator<=>(const TwistedMonomial&) const = default;

    std::string str() const;

private:
    std::vector<int> dlevels_;
};

/// Element of the theta-twisted space V_L^{T_i} = M(1)[-1] tensor T_i, graded
/// in 1/16 + (1/2)Z_{>=0}. e_{+-alpha} acts as +1 on T_1 and -1 on T_2.
class TwistedState {
public:
    TwistedState(int k, int sector);

    int k() const { return k_; }
    int sector() const { return sector_; }
    static TwistedState top(int k, int sector);

    void add(const TwistedMonomial& m, const Rat& c);
    const std::map<TwistedMonomial, Rat>& terms() const { return terms_; }
    Rat coeff(const TwistedMonomial& m) const;
    bool is_zero() const { return terms_.empty(); }

    TwistedState& operator+=(const TwistedState& o);
    TwistedState& operator-=(const TwistedState& o);
    TwistedState& operator*=(const Rat& c);
    friend TwistedState operator+(TwistedState a, const TwistedState& b) { return a += b; }
    friend TwistedState operator-(TwistedState a, const TwistedState& b) { return a -= b; }
    friend TwistedState operator*(TwistedState a, const Rat& c) { return a *= c; }
    friend TwistedState operator*(const Rat& c, TwistedState a) { return a *= c; }
    friend bool operator==(const TwistedState& a, const TwistedState& b) {
        return a.k_ == b.k_ && a.sector_ == b.sector_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int k_;
    int sector_;
    std::map<TwistedMonomial, Rat> terms_;
};

/// Twisted Heisenberg mode a(n), n in (1/2)+Z, with [a(m),a(n)] = 2km d_{m+n,0}.
TwistedState twisted_apply_alpha(const Rat& n, const TwistedState& v);

/// Coefficient c_{mn} of x^m y^n in -log(((1+x)^{1/2}+(1+y)^{1/2})/2), the
/// generating function of the quadratic correction Delta_z.
Rat delta_coeff(int m, int n);

/// Mode of Y^tw(e^{sign*alpha}, z) =
///   2^{-2k} E^-(-sign*a, z) E^+(-sign*a, z) e_{sign*a} z^{-k}
/// with half-odd-integer exponential modes.
TwistedState twisted_exp_mode(int sign, const Rat& n, const TwistedState& w);

/// Mode of Y^tw(u, z) = W(exp(Delta_z) u, z) for u in M(1).
TwistedState twisted_heis_mode(const FockVector& u, const Rat& n, const TwistedState& w, int k);

/// General mode for u in V_L with labels in {-1, 0, +1}; larger exponential
/// charges are outside this module's scope and throw.
TwistedState twisted_mixed_mode(const LatticeState& u, const Rat& n, const TwistedState& w);

/// (lam_omega, lam_E, lam_J) on the top level of (V_L^{T_i})^{parity},
/// computed through the mode machinery.
std::array<Rat, 3> twisted_top_scalars(int k, int i, int parity);

/// Eigenvalue of o(u) on the 1-dimensional top level of (V_L^{T_i})^{parity};
/// throws if o(u) does not act as a scalar there.
Rat twisted_o_scalar(const LatticeState& u, int i, int parity);

}  // namespace vlplus
