#pragma once

#include "vlplus/lattice.hpp"
#include "vlplus/matrix.hpp"
#include "vlplus/modules.hpp"
#include "vlplus/polynomial.hpp"
#include "vlplus/report.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace vlplus {

/// u*v = sum_i binom(wt u, i) u_{i-1} v, extended by linearity over the
/// homogeneous components of u (which must have nonnegative integer weights).
LatticeState star(const LatticeState& u, const LatticeState& v);
/// u o v = sum_i binom(wt u, i) u_{i-2} v; O(V) is the span of these.
LatticeState circ(const LatticeState& u, const LatticeState& v);
/// sum_i binom(wt u, i) u_{i-n-2} v for n >= 0, an explicit O(V) generator.
LatticeState ov_residue(const LatticeState& u, const LatticeState& v, long n);

/// p(omega) * v via right-associated star powers: sum_i p_i omega^{*i} * v.
LatticeState poly_star(const Poly& p, const LatticeState& v);
/// (omega - c_1) * (omega - c_2) * ... * v, right-associated.
LatticeState omega_poly_star(const std::vector<Rat>& shifts, const LatticeState& v);

struct OVCertEntry {
    LatticeState u, v;
    long n;
    Rat c;
};

/// target = sum_i c_i Res_z[(1+z)^{wt u_i}/z^{2+n_i}] Y(u_i,z) v_i, replayable.
struct OVCertificate {
    std::vector<OVCertEntry> entries;
    long cutoff = 0;
};

LatticeState certificate_eval(const OVCertificate& cert, int k);

struct LReduceStep {
    int n;               // the L(-n) that was rewritten
    LatticeState input;  // the state it was applied to
    std::vector<OVCertEntry> gens;  // L(-n) input - rewritten == sum of these
};

struct LReduceResult {
    LatticeState reduced;     // value of the L(-2)/L(-1)/L(0)-only rewrite
    LatticeState difference;  // original - reduced, an explicit element of O(V)
    std::vector<LReduceStep> steps;
};

/// Rewrite L(-n_1)...L(-n_s) base modulo O(V), eliminating every factor with
/// n >= 3 (and n = 1) through L(-n) ~ (-1)^n {(n-1)(L(-2)+L(-1)) + L(0)}.
/// Each step's difference is certified by explicit O(V) generators.
LReduceResult l_reduce(const std::vector<int>& word, const LatticeState& base);

struct Lemma51Result {
    MatQ matrix;    // computed 11x11 change of basis
    MatQ expected;  // closed-form table at this k
    Rat det;
    Rat expected_det;  // 6144(1-k)k^2
    bool matrix_ok;
    bool det_ok;
    std::vector<std::string> row_names;
};

/// Expands L(-1)f_i, 2k L(-3)h_j and (a(-1)^4)_{-3} E in the ordered monomial
/// basis g_1..g_11 of the weight k+6 piece of the charge-1 sector.
Lemma51Result lemma51_check(int k);

/// The structure polynomials of A(V_L^+): J^2 = p(w) + q(w) J,
/// JE = r(w)E, t(w)E = 0, E^2 = a(w) + s(w)(J + w - 4w^2),
/// b = a + (q - r + x - 4x^2) s, phi = (x-1)(x-1/16)(x-9/16)(x-k/4) a.
struct ZhuPolynomials {
    int k;
    Poly p, q, r, s, t, a, b, phi;
    Rat a0;
};

/// Fits r from the computed characters at k/4, 1/16, 9/16 (and checks the
/// closed form), builds a from its forced roots, fits s from the characters
/// of V_L^-, T1^+ and T1^-.
ZhuPolynomials fit_structure_polynomials(int k);

/// Closed form for r(x), independent of the fit.
Poly r_closed_form(int k);

struct RelationReport {
    int k;
    std::vector<CheckEntry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (e.status != "pass") return false;
        return true;
    }
};

/// Exact verification of (B1),(B2),(L1),(L2) on all k+7 characters plus the
/// polynomial identities and the square-class trichotomy of b.
RelationReport verify_relations(int k);

struct BasisCertificate {
    int k;
    std::string square_class;  // "non-square" | "even-square" | "odd-square"
    std::vector<std::array<int, 3>> basis;  // exponents (s,t,u): omega^s J^t E^u
    MatQ eval;  // (k+7) x (k+7) character evaluation matrix
    Rat det;
    bool characters_distinct;
    bool pass;  // det != 0 and characters pairwise distinct
};

BasisCertificate zhu_basis_certificate(int k);

/// Search for an explicit O(V) representation of target among the residue
/// generators with wt u + wt v + n + 1 <= cutoff. Returns nullopt when the
/// truncated span does not contain the target ("inconclusive").
std::optional<OVCertificate> certify_in_OV(const LatticeState& target, long cutoff);

/// (J - r(omega))*E and t(omega)*E, the relation states fed to the engine.
LatticeState l1_target(int k);
LatticeState l2_target(int k);

struct ClassificationReport {
    int k = 0;
    bool special_k1 = false;
    std::string notice;
    std::vector<ModuleDescriptor> modules;
    BasisCertificate basis;
    int dim = 0;
    bool commutative_semisimple = false;
};

ClassificationReport classify(int k);

}  // namespace vlplus
