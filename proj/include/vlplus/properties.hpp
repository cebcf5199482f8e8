#pragma once

#include "vlplus/report.hpp"

#include <vector>

namespace vlplus {

/// Randomized exact checks of the bracket relations on states of weight <= 10:
/// Heisenberg, Virasoro (c = 1) and [L,J] on M(1); [L,E] on the lattice space;
/// their twisted counterparts; plus a small Borcherds commutator sample.
/// Deterministic for a fixed seed; every check is an exact state identity.
std::vector<CheckEntry> fock_commutator_suite(int k, unsigned seed, int trials);
std::vector<CheckEntry> lattice_commutator_suite(int k, unsigned seed, int trials);
std::vector<CheckEntry> twisted_commutator_suite(int k, unsigned seed, int trials);

/// The twisted scalar table entries recomputed through the mode machinery and
/// compared with their closed forms.
std::vector<CheckEntry> twisted_table_suite(int k);

}  // namespace vlplus
