#pragma once

#include "vlplus/lattice.hpp"
#include "vlplus/rational.hpp"

#include <string>

namespace vlplus {

/// Result of evaluating a state expression: either a pure rational or a state.
struct EvalResult {
    bool is_scalar = false;
    Rat scalar;
    LatticeState state;

    explicit EvalResult(int k) : state(k) {}
};

/// Evaluate the expression grammar
///   expr    := ['-'] term (('+'|'-') term)*
///   term    := factor+              (juxtaposition applies right to left)
///   factor  := RATIONAL | one | omega | J | E | F
///            | Em(INT) | Fm(INT) | a(INT) | e(RATIONAL)
///            | star(expr, expr) | circ(expr, expr) | '(' expr ')'
/// where a(n) acts as the Heisenberg mode and rationals scale.
EvalResult eval_expr(const std::string& text, int k);

/// Canonical rendering: terms in storage order, each as
/// "c a(-n1) a(-n2) ... one|e(r)". parse(print(s)) == s.
std::string print_state(const LatticeState& s);

/// eval_expr that must produce a state (throws on scalar results).
LatticeState parse_state(const std::string& text, int k);

}  // namespace vlplus
