#include "vlplus/modules.hpp"

#include <sstream>
#include <stdexcept>

namespace vlplus {

bool is_twisted(ModuleKind kind) {
    switch (kind) {
        case ModuleKind::T1Plus:
        case ModuleKind::T1Minus:
        case ModuleKind::T2Plus:
        case ModuleKind::T2Minus:
            return true;
        default:
            return false;
    }
}

std::string ModuleDescriptor::name() const {
    switch (kind) {
        case ModuleKind::VLPlus: return "V_L^+";
        case ModuleKind::VLMinus: return "V_L^-";
        case ModuleKind::Coset: {
            std::ostringstream os;
            os << "V_{L+" << r << "/2k a}";
            return os.str();
        }
        case ModuleKind::HalfPlus: return "V_{L+a/2}^+";
        case ModuleKind::HalfMinus: return "V_{L+a/2}^-";
        case ModuleKind::T1Plus: return "V_L^{T1,+}";
        case ModuleKind::T1Minus: return "V_L^{T1,-}";
        case ModuleKind::T2Plus: return "V_L^{T2,+}";
        case ModuleKind::T2Minus: return "V_L^{T2,-}";
    }
    return "?";
}

std::string ModuleDescriptor::id() const {
    switch (kind) {
        case ModuleKind::VLPlus: return "vl+";
        case ModuleKind::VLMinus: return "vl-";
        case ModuleKind::Coset: {
            std::ostringstream os;
            os << "coset:" << r;
            return os.str();
        }
        case ModuleKind::HalfPlus: return "half+";
        case ModuleKind::HalfMinus: return "half-";
        case ModuleKind::T1Plus: return "t1+";
        case ModuleKind::T1Minus: return "t1-";
        case ModuleKind::T2Plus: return "t2+";
        case ModuleKind::T2Minus: return "t2-";
    }
    return "?";
}

LatticeState untwisted_top_state(int k, ModuleKind kind, int r) {
    switch (kind) {
        case ModuleKind::VLPlus:
            return vacuum_lattice(k);
        case ModuleKind::VLMinus:
            return LatticeState::from_fock(
                FockVector::monomial(HeisMonomial({1})), k);
        case ModuleKind::Coset: {
            if (r < 1 || r > k - 1)
                throw std::invalid_argument("untwisted_top_state: coset index out of range");
            return LatticeState::exponential(k, ratio(r, 2l * k));
        }
        case ModuleKind::HalfPlus: {
            LatticeState s = LatticeState::exponential(k, ratio(1, 2));
            s.add(HeisMonomial{}, ratio(-1, 2), 1);
            return s;
        }
        case ModuleKind::HalfMinus: {
            LatticeState s = LatticeState::exponential(k, ratio(1, 2));
            s.add(HeisMonomial{}, ratio(-1, 2), -1);
            return s;
        }
        default:
            throw std::invalid_argument("untwisted_top_state: twisted module kind");
    }
}

namespace {

Rat scalar_on_top(const LatticeState& result, const LatticeState& top) {
    if (result.is_zero()) return Rat(0);
    const auto& [t0, c0] = *top.terms().begin();
    Rat lambda = result.coeff(t0.mono, t0.label) / c0;
    LatticeState check = top;
    check *= lambda;
    if (!(check == result))
        throw std::logic_error("top level is not an eigenvector of o(u)");
    return lambda;
}

Rat untwisted_o_scalar(const LatticeState& u, const LatticeState& top) {
    LatticeState acc(u.k());
    for (const Rat& w : u.weights()) acc += vertex_mode(u.component(w), w - 1, top);
    return scalar_on_top(acc, top);
}

}  // namespace

std::array<Rat, 3> untwisted_top_scalars(int k, ModuleKind kind, int r) {
    if (is_twisted(kind))
        throw std::invalid_argument("untwisted_top_scalars: twisted kind, use twisted module");
    const LatticeState top = untwisted_top_state(k, kind, r);
    const Rat lam_omega = untwisted_o_scalar(omega_lattice(k), top);
    const Rat lam_e = untwisted_o_scalar(em_state(1, k), top);
    const Rat lam_j = untwisted_o_scalar(j_lattice(k), top);
    return {lam_omega, lam_e, lam_j};
}

std::vector<ModuleDescriptor> module_catalog(int k) {
    if (k < 1) throw std::invalid_argument("module_catalog: k must be positive");
    if (k == 1) throw std::domain_error(k1_notice());
    std::vector<ModuleDescriptor> out;
    auto push_untwisted = [&](ModuleKind kind, int r, const Rat& top_weight) {
        auto [lo, le, lj] = untwisted_top_scalars(k, kind, r);
        out.push_back({kind, r, top_weight, lo, le, lj});
    };
    push_untwisted(ModuleKind::VLPlus, 0, Rat(0));
    push_untwisted(ModuleKind::VLMinus, 0, Rat(1));
    for (int r = 1; r <= k - 1; ++r)
        push_untwisted(ModuleKind::Coset, r, ratio(1l * r * r, 4l * k));
    push_untwisted(ModuleKind::HalfPlus, 0, ratio(k, 4));
    push_untwisted(ModuleKind::HalfMinus, 0, ratio(k, 4));
    auto push_twisted = [&](ModuleKind kind, int i, int parity) {
        auto [lo, le, lj] = twisted_top_scalars(k, i, parity);
        out.push_back({kind, 0, parity == 1 ? ratio(1, 16) : ratio(9, 16), lo, le, lj});
    };
    push_twisted(ModuleKind::T1Plus, 1, 1);
    push_twisted(ModuleKind::T1Minus, 1, -1);
    push_twisted(ModuleKind::T2Plus, 2, 1);
    push_twisted(ModuleKind::T2Minus, 2, -1);
    return out;
}

std::string k1_notice() {
    return "k = 1: V_L^+ is isomorphic to the lattice vertex operator algebra V_{L'} "
           "with <b,b> = 8 (the k = 4 case), and has exactly 8 irreducible modules; "
           "run with --k 4 for the native computation.";
}

ModuleDescriptor find_module(int k, const std::string& id) {
    for (const auto& m : module_catalog(k))
        if (m.id() == id) return m;
    throw std::invalid_argument("unknown module id: " + id);
}

Rat character_eval(const LatticeState& u, const ModuleDescriptor& mod) {
    const int k = u.k();
    switch (mod.kind) {
        case ModuleKind::T1Plus: return twisted_o_scalar(u, 1, 1);
        case ModuleKind::T1Minus: return twisted_o_scalar(u, 1, -1);
        case ModuleKind::T2Plus: return twisted_o_scalar(u, 2, 1);
        case ModuleKind::T2Minus: return twisted_o_scalar(u, 2, -1);
        default: {
            const LatticeState top = untwisted_top_state(k, mod.kind, mod.r);
            return untwisted_o_scalar(u, top);
        }
    }
}

}  // namespace vlplus
