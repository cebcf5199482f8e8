#include "vlplus/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vlplus {

namespace {

Rat frac_part(const Rat& r) {
    const Int num = numerator(r), den = denominator(r);
    Int m = num % den;
    if (m < 0) m += den;
    return Rat(m, den);
}

}  // namespace

LatticeState::LatticeState(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("LatticeState: k must be positive");
}

LatticeState LatticeState::from_fock(const FockVector& v, int k, const Rat& label) {
    LatticeState s(k);
    for (const auto& [m, c] : v.terms()) s.add(m, label, c);
    return s;
}

LatticeState LatticeState::exponential(int k, const Rat& label, const Rat& c) {
    LatticeState s(k);
    s.add(HeisMonomial{}, label, c);
    return s;
}

void LatticeState::add(const HeisMonomial& m, const Rat& label, const Rat& c) {
    if (denominator(label * 2 * k_) != 1)
        throw std::invalid_argument("LatticeState: label not in (1/2k)Z");
    if (c == 0) return;
    LatticeTerm t{label, m};
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat LatticeState::coeff(const HeisMonomial& m, const Rat& label) const {
    auto it = terms_.find(LatticeTerm{label, m});
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat LatticeState::term_weight(const LatticeTerm& t) const {
    return Rat(t.mono.weight()) + Rat(k_) * t.label * t.label;
}

bool LatticeState::is_homogeneous() const {
    if (terms_.empty()) return true;
    const Rat w = term_weight(terms_.begin()->first);
    for (const auto& [t, c] : terms_)
        if (term_weight(t) != w) return false;
    return true;
}

Rat LatticeState::weight() const {
    if (terms_.empty()) throw std::domain_error("LatticeState::weight: zero state");
    if (!is_homogeneous()) throw std::domain_error("LatticeState::weight: not homogeneous");
    return term_weight(terms_.begin()->first);
}

std::vector<Rat> LatticeState::weights() const {
    std::vector<Rat> ws;
    for (const auto& [t, c] : terms_) {
        Rat w = term_weight(t);
        if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
    }
    std::sort(ws.begin(), ws.end());
    return ws;
}

LatticeState LatticeState::component(const Rat& weight) const {
    LatticeState out(k_);
    for (const auto& [t, c] : terms_)
        if (term_weight(t) == weight) out.add(t.mono, t.label, c);
    return out;
}

std::vector<Rat> LatticeState::labels() const {
    std::vector<Rat> ls;
    for (const auto& [t, c] : terms_)
        if (std::find(ls.begin(), ls.end(), t.label) == ls.end()) ls.push_back(t.label);
    std::sort(ls.begin(), ls.end());
    return ls;
}

FockVector LatticeState::fock_at_label(const Rat& label) const {
    FockVector out;
    for (const auto& [t, c] : terms_)
        if (t.label == label) out.add(t.mono, c);
    return out;
}

bool LatticeState::has_integral_labels() const {
    for (const auto& [t, c] : terms_)
        if (denominator(t.label) != 1) return false;
    return true;
}

bool LatticeState::is_single_coset() const {
    if (terms_.empty()) return true;
    const Rat res = frac_part(terms_.begin()->first.label);
    for (const auto& [t, c] : terms_)
        if (frac_part(t.label) != res) return false;
    return true;
}

LatticeState& LatticeState::operator+=(const LatticeState& o) {
    if (k_ != o.k_) throw std::invalid_argument("LatticeState: mixed k");
    for (const auto& [t, c] : o.terms_) add(t.mono, t.label, c);
    return *this;
}

LatticeState& LatticeState::operator-=(const LatticeState& o) {
    if (k_ != o.k_) throw std::invalid_argument("LatticeState: mixed k");
    for (const auto& [t, c] : o.terms_) add(t.mono, t.label, -c);
    return *this;
}

LatticeState& LatticeState::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, v] : terms_) v *= c;
    return *this;
}

std::string LatticeState::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (t.mono.length() > 0) os << " " << t.mono.str();
        if (t.label != 0) os << " e(" << t.label << ")";
    }
    return os.str();
}

LatticeState lattice_apply_alpha(int n, const LatticeState& v) {
    const int k = v.k();
    LatticeState out(k);
    for (const auto& [t, c] : v.terms()) {
        if (n < 0) {
            out.add(t.mono.with_level(-n), t.label, c);
        } else if (n == 0) {
            out.add(t.mono, t.label, c * Rat(2 * k) * t.label);
        } else {
            const int mult = t.mono.count(n);
            if (mult > 0)
                out.add(t.mono.without_level(n), t.label, c * Rat(2 * k) * n * mult);
        }
    }
    return out;
}

LatticeState theta(const LatticeState& v) {
    LatticeState out(v.k());
    for (const auto& [t, c] : v.terms())
        out.add(t.mono, -t.label, t.mono.parity() == 1 ? c : -c);
    return out;
}

LatticeState theta_project(const LatticeState& v, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("theta_project: sign must be +-1");
    LatticeState th = theta(v);
    LatticeState out = v;
    if (sign == 1)
        out += th;
    else
        out -= th;
    return out * ratio(1, 2);
}

LatticeState vertex_mode(const LatticeState& u, const Rat& n, const LatticeState& w) {
    if (u.k() != w.k()) throw std::invalid_argument("vertex_mode: mixed k");
    const int k = u.k();
    if (!u.has_integral_labels())
        throw std::invalid_argument("vertex_mode: u must be supported on integral labels");
    if (!w.is_single_coset()) throw std::invalid_argument("vertex_mode: w mixes cosets");

    // The z-exponents of Y(u_term, z) w_term lie in 2k*charge*label + Z, so a
    // contribution needs -n-1 to match that residue for some pair of terms.
    bool compatible = u.is_zero() || w.is_zero();
    for (const auto& [tu, cu] : u.terms()) {
        for (const auto& [tw, cw] : w.terms()) {
            Rat delta = -n - 1 - Rat(2 * k) * tu.label * tw.label;
            if (denominator(delta) == 1) {
                compatible = true;
                break;
            }
        }
        if (compatible) break;
    }
    if (!compatible)
        throw std::invalid_argument("vertex_mode: mode index incompatible with sector");

    LatticeState out(k);
    for (const auto& [tu, cu] : u.terms()) {
        const long charge = static_cast<long>(numerator(tu.label));
        for (const auto& [tw, cw] : w.terms()) {
            auto partial =
                detail::untwisted_mode_term(tu.mono.levels(), charge, tw.mono, tw.label, n, k);
            const Rat out_label = tw.label + tu.label;
            for (const auto& [m, c] : partial) out.add(m, out_label, cu * cw * c);
        }
    }
    return out;
}

LatticeState exp_exp_expansion(int m, int s, int j, int k) {
    if (j < 0) throw std::invalid_argument("exp_exp_expansion: j must be nonnegative");
    return LatticeState::from_fock(schur_p(j, Rat(m)), k, Rat(m + s));
}

LatticeState vacuum_lattice(int k) { return LatticeState::from_fock(vacuum_state(), k); }
LatticeState omega_lattice(int k) { return LatticeState::from_fock(omega_state(k), k); }
LatticeState j_lattice(int k) { return LatticeState::from_fock(j_state(k), k); }

LatticeState em_state(int m, int k) {
    LatticeState s(k);
    s.add(HeisMonomial{}, Rat(m), 1);
    s.add(HeisMonomial{}, Rat(-m), 1);
    return s;
}

LatticeState fm_state(int m, int k) {
    LatticeState s(k);
    s.add(HeisMonomial{}, Rat(m), 1);
    s.add(HeisMonomial{}, Rat(-m), -1);
    return s;
}

GeneratorSet build_generators(int k) {
    return {omega_lattice(k), j_lattice(k), em_state(1, k), fm_state(1, k)};
}

std::vector<LatticeState> vlplus_sector_basis(int k, int sector_m, int weight) {
    if (sector_m < 0) throw std::invalid_argument("vlplus_sector_basis: sector must be >= 0");
    std::vector<LatticeState> out;
    const int heis_weight = weight - k * sector_m * sector_m;
    if (heis_weight < 0) return out;
    for (const auto& mono : heis_partitions(heis_weight)) {
        if (sector_m == 0) {
            if (mono.parity() != 1) continue;  // M(1)^+ only
            out.push_back(LatticeState::from_fock(FockVector::monomial(mono), k));
        } else {
            LatticeState base =
                mono.parity() == 1 ? em_state(sector_m, k) : fm_state(sector_m, k);
            LatticeState s(k);
            for (const auto& [t, c] : base.terms()) s.add(mono, t.label, c);
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace vlplus
