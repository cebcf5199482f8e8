#pragma once

#include "vlplus/fock.hpp"
#include "vlplus/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace vlplus {

/// One basis state (Heisenberg monomial) tensor e^{label * alpha} of the
/// lattice Fock space V_{L°}. Valid labels satisfy 2k*label in Z.
struct LatticeTerm {
    Rat label;
    HeisMonomial mono;

    friend bool operator==(const LatticeTerm& a, const LatticeTerm& b) {
        return a.label == b.label && a.mono == b.mono;
    }
    friend bool operator<(const LatticeTerm& a, const LatticeTerm& b) {
        if (a.label != b.label) return a.label < b.label;
        return a.mono < b.mono;
    }
};

/// Exact combination of lattice Fock states at a fixed normalization
/// <alpha,alpha> = 2k. Weight of a term = monomial weight + k*label^2.
class LatticeState {
public:
    explicit LatticeState(int k);
    static LatticeState from_fock(const FockVector& v, int k, const Rat& label = Rat(0));
    static LatticeState exponential(int k, const Rat& label, const Rat& c = Rat(1));

    int k() const { return k_; }
    void add(const HeisMonomial& m, const Rat& label, const Rat& c);
    const std::map<LatticeTerm, Rat>& terms() const { return terms_; }
    Rat coeff(const HeisMonomial& m, const Rat& label) const;
    bool is_zero() const { return terms_.empty(); }

    Rat term_weight(const LatticeTerm& t) const;
    bool is_homogeneous() const;
    Rat weight() const;
    std::vector<Rat> weights() const;
    LatticeState component(const Rat& weight) const;

    std::vector<Rat> labels() const;
    FockVector fock_at_label(const Rat& label) const;
    /// All labels integral (the state lies in V_L up to charge).
    bool has_integral_labels() const;
    /// All labels congruent mod 1 (single coset V_{L+lambda}).
    bool is_single_coset() const;

    LatticeState& operator+=(const LatticeState& o);
    LatticeState& operator-=(const LatticeState& o);
    LatticeState& operator*=(const Rat& c);
    friend LatticeState operator+(LatticeState a, const LatticeState& b) { return a += b; }
    friend LatticeState operator-(LatticeState a, const LatticeState& b) { return a -= b; }
    friend LatticeState operator*(LatticeState a, const Rat& c) { return a *= c; }
    friend LatticeState operator*(const Rat& c, LatticeState a) { return a *= c; }
    friend LatticeState operator-(LatticeState a) { return a *= Rat(-1); }
    friend bool operator==(const LatticeState& a, const LatticeState& b) {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int k_;
    std::map<LatticeTerm, Rat> terms_;
};

/// Heisenberg mode on the full lattice space; a(0) reads the momentum 2k*label.
LatticeState lattice_apply_alpha(int n, const LatticeState& v);

/// theta: a(n) -> -a(n), e^{g} -> e^{-g}.
LatticeState theta(const LatticeState& v);
LatticeState theta_project(const LatticeState& v, int sign);

/// Mode u_n of Y(u,z) = sum u_n z^{-n-1} acting on w, for u supported on
/// integral labels. Exponential operators carry the trivial 2-cocycle, so
/// Y(e^{m a},z) e^{s a} = sum_j p_j(m a) e^{(m+s)a} z^{2kms+j}. Throws if w
/// mixes cosets or if the mode index cannot act on w's coset.
LatticeState vertex_mode(const LatticeState& u, const Rat& n, const LatticeState& w);

/// Coefficient of z^{2kms+j} in Y(e^{m a},z)e^{s a}: schur_p(j,m) at e^{(m+s)a}.
LatticeState exp_exp_expansion(int m, int s, int j, int k);

LatticeState vacuum_lattice(int k);
LatticeState omega_lattice(int k);
LatticeState j_lattice(int k);
/// E^m = e^{m a} + e^{-m a},  F^m = e^{m a} - e^{-m a}.
LatticeState em_state(int m, int k);
LatticeState fm_state(int m, int k);

struct GeneratorSet {
    LatticeState omega;
    LatticeState J;
    LatticeState E;
    LatticeState F;
};
GeneratorSet build_generators(int k);

/// Monomial basis of the theta-fixed weight space of sector m: even-length
/// monomials tensor E^m and odd-length ones tensor F^m (pure M(1)^+ for
/// m = 0), listed by descending-lex partition order.
std::vector<LatticeState> vlplus_sector_basis(int k, int sector_m, int weight);

}  // namespace vlplus
