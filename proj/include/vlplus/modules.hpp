#pragma once

#include "vlplus/lattice.hpp"
#include "vlplus/rational.hpp"
#include "vlplus/twisted.hpp"

#include <array>
#include <string>
#include <vector>

namespace vlplus {

enum class ModuleKind {
    VLPlus,      // V_L^+
    VLMinus,     // V_L^-
    Coset,       // V_{L + r/2k a}, 1 <= r <= k-1
    HalfPlus,    // V_{L + a/2}^+
    HalfMinus,   // V_{L + a/2}^-
    T1Plus,
    T1Minus,
    T2Plus,
    T2Minus,
};

bool is_twisted(ModuleKind kind);

/// One of the k+7 irreducible V_L^+-modules together with its top weight and
/// the scalars by which omega, E, J act on the 1-dimensional top level.
struct ModuleDescriptor {
    ModuleKind kind;
    int r = 0;  // coset index when kind == Coset
    Rat top_weight;
    Rat lam_omega;
    Rat lam_E;
    Rat lam_J;

    std::string name() const;  // display name
    std::string id() const;    // stable CLI identifier, e.g. "vl+", "coset:2", "t1-"
};

/// Explicit top-level vector of an untwisted module.
LatticeState untwisted_top_state(int k, ModuleKind kind, int r = 0);

/// (lam_omega, lam_E, lam_J) on an untwisted top level, computed from
/// o(u) = u_{wt(u)-1} through vertex_mode. Throws for twisted kinds.
std::array<Rat, 3> untwisted_top_scalars(int k, ModuleKind kind, int r = 0);

/// The k+7 descriptors for k >= 2, in the order
/// V_L^+, V_L^-, cosets r = 1..k-1, V_{L+a/2}^+-, then T1^+-, T2^+-.
/// k = 1 is special-cased at the classification level and throws here.
std::vector<ModuleDescriptor> module_catalog(int k);

/// Notice emitted instead of a catalog when k = 1.
std::string k1_notice();

/// Parse a CLI module id; throws on unknown ids or out-of-range cosets.
ModuleDescriptor find_module(int k, const std::string& id);

/// Eigenvalue of o(u) on the module's top level, by direct mode action
/// (untwisted tops via vertex_mode, twisted tops via the twisted machinery).
Rat character_eval(const LatticeState& u, const ModuleDescriptor& mod);

}  // namespace vlplus
