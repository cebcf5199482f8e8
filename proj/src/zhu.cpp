#include "vlplus/zhu.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace vlplus {

namespace {

long homogeneous_int_weight(const LatticeState& comp) {
    const Rat w = comp.weight();
    if (denominator(w) != 1 || w < 0)
        throw std::invalid_argument("zhu products need nonnegative integer weights");
    return static_cast<long>(numerator(w));
}

LatticeState residue_sum(const LatticeState& u, const LatticeState& v, long shift) {
    // sum_i binom(wt u, i) u_{i+shift} v over homogeneous components of u.
    LatticeState out(u.k());
    for (const Rat& w : u.weights()) {
        const LatticeState comp = u.component(w);
        const long wl = homogeneous_int_weight(comp);
        for (long i = 0; i <= wl; ++i) {
            const Rat b = binom_gen(wl, i);
            if (b == 0) continue;
            out += b * vertex_mode(comp, Rat(i + shift), v);
        }
    }
    return out;
}

}  // namespace

LatticeState star(const LatticeState& u, const LatticeState& v) {
    return residue_sum(u, v, -1);
}

LatticeState circ(const LatticeState& u, const LatticeState& v) {
    return residue_sum(u, v, -2);
}

LatticeState ov_residue(const LatticeState& u, const LatticeState& v, long n) {
    if (n < 0) throw std::invalid_argument("ov_residue: n must be nonnegative");
    return residue_sum(u, v, -n - 2);
}

LatticeState poly_star(const Poly& p, const LatticeState& v) {
    LatticeState acc(v.k());
    if (p.is_zero()) return acc;
    const LatticeState om = omega_lattice(v.k());
    LatticeState cur = v;  // omega^{*0} * v
    acc += p.coeff(0) * cur;
    for (int i = 1; i <= p.degree(); ++i) {
        cur = star(om, cur);
        acc += p.coeff(i) * cur;
    }
    return acc;
}

LatticeState omega_poly_star(const std::vector<Rat>& shifts, const LatticeState& v) {
    const LatticeState om = omega_lattice(v.k());
    LatticeState acc = v;
    for (auto it = shifts.rbegin(); it != shifts.rend(); ++it)
        acc = star(om, acc) - *it * acc;
    return acc;
}

LatticeState certificate_eval(const OVCertificate& cert, int k) {
    LatticeState acc(k);
    for (const auto& e : cert.entries) acc += e.c * ov_residue(e.u, e.v, e.n);
    return acc;
}

namespace {

LatticeState l_mode(int m, const LatticeState& v) {
    return vertex_mode(omega_lattice(v.k()), Rat(m + 1), v);
}

// Generator combination certifying
//   L(-n) y - (-1)^n {(n-1)(L(-2)+L(-1)) + L(0)} y  in O(V):
// built from G_j(y) = ov_residue(omega, y, j) = [L(-j-3)+2L(-j-2)+L(-j-1)] y
// and H(y) = ov_residue(y, 1, 0) = [L(-1)+L(0)] y via
//   D(1) = H,  D(2) = -H,  D(n) = G_{n-3} - 2 D(n-1) - D(n-2).
void d_combo(int n, const Rat& scale, std::map<std::pair<bool, int>, Rat>& out) {
    if (n == 1) {
        out[{false, 0}] += scale;
        return;
    }
    if (n == 2) {
        out[{false, 0}] -= scale;
        return;
    }
    out[{true, n - 3}] += scale;
    d_combo(n - 1, -2 * scale, out);
    d_combo(n - 2, -scale, out);
}

std::vector<OVCertEntry> d_combo_entries(int n, const LatticeState& y) {
    std::map<std::pair<bool, int>, Rat> combo;
    d_combo(n, Rat(1), combo);
    std::vector<OVCertEntry> out;
    const LatticeState om = omega_lattice(y.k());
    const LatticeState one = vacuum_lattice(y.k());
    for (const auto& [key, c] : combo) {
        if (c == 0) continue;
        if (key.first)
            out.push_back({om, y, key.second, c});
        else
            out.push_back({y, one, 0, c});
    }
    return out;
}

}  // namespace

LReduceResult l_reduce(const std::vector<int>& word, const LatticeState& base) {
    const int k = base.k();
    for (int n : word)
        if (n < 0) throw std::invalid_argument("l_reduce: factors are L(-n) with n >= 0");

    LReduceResult res{base, LatticeState(k), {}};
    LatticeState exact = base;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int n = *it;
        exact = l_mode(-n, exact);
        res.difference = l_mode(-n, res.difference);
        if (n >= 3 || n == 1) {
            const LatticeState y = res.reduced;
            const int sign = n % 2 == 0 ? 1 : -1;
            LatticeState rewritten =
                Rat(sign) * (Rat(n - 1) * (l_mode(-2, y) + l_mode(-1, y)) + l_mode(0, y));
            std::vector<OVCertEntry> gens = d_combo_entries(n, y);
            LatticeState step_diff(k);
            for (const auto& e : gens) step_diff += e.c * ov_residue(e.u, e.v, e.n);
            if (!(step_diff == l_mode(-n, y) - rewritten))
                throw std::logic_error("l_reduce: generator combination failed to replay");
            res.steps.push_back({n, y, std::move(gens)});
            res.difference += step_diff;
            res.reduced = std::move(rewritten);
        } else {
            res.reduced = l_mode(-n, res.reduced);
        }
    }
    if (!(exact == res.reduced + res.difference))
        throw std::logic_error("l_reduce: reduction bookkeeping violated");
    return res;
}

namespace {

MatQ lemma51_expected(int k) {
    const Rat K(k);
    const Rat rows[11][11] = {
        {5, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 4, 1, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 3, 0, 2, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 3, 0, 2, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 4, 0, 1, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 2, 0, 3, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 1},
        {6 * K, 0, 0, 0, 2 * K, 1, 0, 0, 0, 0, 0},
        {0, 4 * K, 2 * K, 0, 0, 2 * K, 0, 0, 1, 0, 0},
        {0, 0, 0, 6 * K, 0, 0, 2 * K, 0, 0, 1, 0},
        {32 * K * K * K, 48 * K * K, 48 * K * K, 24 * K, 24 * K * K, 48 * K, 4, 8 * K, 6, 0,
         0},
    };
    MatQ m(11, 11);
    for (std::size_t i = 0; i < 11; ++i)
        for (std::size_t j = 0; j < 11; ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Coefficients of a charge-1 theta-invariant state against the ordered
// monomial basis of its weight space; throws if anything sticks out.
std::vector<Rat> expand_in_sector_basis(const LatticeState& state,
                                        const std::vector<LatticeState>& basis) {
    std::vector<Rat> coeffs;
    LatticeState rem = state;
    for (const auto& b : basis) {
        const auto& [t0, c0] = *b.terms().begin();
        const Rat c = rem.coeff(t0.mono, t0.label) / c0;
        coeffs.push_back(c);
        rem -= c * b;
    }
    if (!rem.is_zero())
        throw std::logic_error("expand_in_sector_basis: state outside the basis span");
    return coeffs;
}

}  // namespace

Lemma51Result lemma51_check(int k) {
    if (k < 2) throw std::invalid_argument("lemma51_check: k must be >= 2");
    const auto g = vlplus_sector_basis(k, 1, k + 6);
    const auto f = vlplus_sector_basis(k, 1, k + 5);
    const auto h = vlplus_sector_basis(k, 1, k + 3);
    if (g.size() != 11 || f.size() != 7 || h.size() != 3)
        throw std::logic_error("lemma51_check: unexpected basis dimensions");

    Lemma51Result res;
    res.matrix = MatQ(11, 11);
    std::vector<LatticeState> rows;
    for (int i = 0; i < 7; ++i) {
        rows.push_back(l_mode(-1, f[i]));
        res.row_names.push_back("L(-1)f" + std::to_string(i + 1));
    }
    for (int j = 0; j < 3; ++j) {
        rows.push_back(Rat(2 * k) * l_mode(-3, h[j]));
        res.row_names.push_back("2k L(-3)h" + std::to_string(j + 1));
    }
    rows.push_back(vertex_mode(
        LatticeState::from_fock(FockVector::monomial(HeisMonomial({1, 1, 1, 1})), k), Rat(-3),
        em_state(1, k)));
    res.row_names.push_back("(a(-1)^4)_{-3} E");

    for (std::size_t i = 0; i < 11; ++i) {
        const auto coeffs = expand_in_sector_basis(rows[i], g);
        for (std::size_t j = 0; j < 11; ++j) res.matrix.at(i, j) = coeffs[j];
    }
    res.expected = lemma51_expected(k);
    res.det = determinant(res.matrix);
    res.expected_det = Rat(6144) * (1 - Rat(k)) * k * k;
    res.matrix_ok = res.matrix == res.expected;
    res.det_ok = res.det == res.expected_det;
    return res;
}

Poly r_closed_form(int k) {
    const Rat den = Rat((4 * k - 9)) * (4 * k - 1);
    const Rat c2 = Rat(2) * (32 * k * k - 8 * k - 9) / den;
    const Rat c1 = Rat(9 + 80 * k - 104 * k * k) / (2 * den);
    const Rat c0 = Rat(27 * k) * (k - 1) / (8 * den);
    return Poly({c0, c1, c2});
}

namespace {

const ModuleDescriptor& find_kind(const std::vector<ModuleDescriptor>& catalog,
                                  ModuleKind kind) {
    for (const auto& m : catalog)
        if (m.kind == kind) return m;
    throw std::logic_error("module kind missing from catalog");
}

Poly fit_quadratic(const std::array<Rat, 3>& nodes, const std::array<Rat, 3>& values) {
    MatQ m(3, 3);
    std::vector<Rat> rhs(3);
    for (std::size_t i = 0; i < 3; ++i) {
        m.at(i, 0) = nodes[i] * nodes[i];
        m.at(i, 1) = nodes[i];
        m.at(i, 2) = 1;
        rhs[i] = values[i];
    }
    auto sol = linear_solve(m, rhs);
    if (sol.status != SolveStatus::Unique)
        throw std::logic_error("structure polynomial fit is singular");
    return Poly({sol.x[2], sol.x[1], sol.x[0]});
}

}  // namespace

ZhuPolynomials fit_structure_polynomials(int k) {
    if (k < 2) throw std::invalid_argument("fit_structure_polynomials: k must be >= 2");
    ZhuPolynomials zp;
    zp.k = k;
    zp.p = Poly({Rat(0), ratio(-27, 70), ratio(89, 10), ratio(-212, 5), ratio(1816, 35)});
    zp.q = Poly({ratio(-27, 70), ratio(89, 14), ratio(-314, 35)});
    zp.t = Poly::from_roots({ratio(k, 4), ratio(1, 16), ratio(9, 16)}, Rat(1));

    const auto catalog = module_catalog(k);
    const auto& half_plus = find_kind(catalog, ModuleKind::HalfPlus);
    const auto& t1_plus = find_kind(catalog, ModuleKind::T1Plus);
    const auto& t1_minus = find_kind(catalog, ModuleKind::T1Minus);
    const auto& vl_minus = find_kind(catalog, ModuleKind::VLMinus);

    // J*E = r(w)E read off on the three modules where E acts invertibly.
    zp.r = fit_quadratic({half_plus.lam_omega, t1_plus.lam_omega, t1_minus.lam_omega},
                         {half_plus.lam_J, t1_plus.lam_J, t1_minus.lam_J});
    if (!(zp.r == r_closed_form(k)))
        throw std::logic_error("fitted r(x) disagrees with its closed form");

    zp.a0 = Rat(2 * int_pow(Int(4 * k), static_cast<unsigned>(k))) /
            Rat(factorial(static_cast<unsigned>(2 * k)));
    std::vector<Rat> roots;
    for (int i = 0; i < k; ++i) roots.push_back(ratio(1l * i * i, 4l * k));
    zp.a = Poly::from_roots(roots, zp.a0);
    if (zp.a(ratio(k, 4)) != 1)
        throw std::logic_error("a(k/4) != 1; leading coefficient is off");

    // E^2 = a(w) + s(w)(J + w - 4w^2) evaluated on V_L^-, T1^+, T1^-.
    auto s_value = [&](const ModuleDescriptor& m) {
        const Rat denom = m.lam_J + m.lam_omega - 4 * m.lam_omega * m.lam_omega;
        return (m.lam_E * m.lam_E - zp.a(m.lam_omega)) / denom;
    };
    zp.s = fit_quadratic({vl_minus.lam_omega, t1_plus.lam_omega, t1_minus.lam_omega},
                         {s_value(vl_minus), s_value(t1_plus), s_value(t1_minus)});

    const Poly x = Poly::x();
    zp.b = zp.a + (zp.q - zp.r + x - Rat(4) * x * x) * zp.s;
    zp.phi = Poly::from_roots({Rat(1), ratio(1, 16), ratio(9, 16), ratio(k, 4)}, Rat(1)) * zp.a;
    return zp;
}

namespace {

std::string square_class_of(int k) {
    if (!is_perfect_square(Int(k))) return "non-square";
    return static_cast<long>(isqrt(Int(k))) % 2 == 0 ? "even-square" : "odd-square";
}

void add_check(std::vector<CheckEntry>& entries, const std::string& name, bool pass,
               const std::string& expected, const std::string& actual) {
    entries.push_back({name, pass ? "pass" : "fail", expected, actual});
}

}  // namespace

RelationReport verify_relations(int k) {
    RelationReport rep{k, {}};
    const auto zp = fit_structure_polynomials(k);
    const auto catalog = module_catalog(k);
    const Poly x = Poly::x();
    const Poly w4 = Rat(4) * x * x - x;  // 4x^2 - x

    for (const auto& m : catalog) {
        const Rat lo = m.lam_omega, le = m.lam_E, lj = m.lam_J;
        const Rat b1 = lj * lj - zp.p(lo) - zp.q(lo) * lj;
        add_check(rep.entries, "B1 @ " + m.name(), b1 == 0, "0", to_string(b1));
        const Rat b2 = (lo - 1) * (lo - ratio(1, 16)) * (lo - ratio(9, 16)) *
                       (lj + lo - 4 * lo * lo);
        add_check(rep.entries, "B2 @ " + m.name(), b2 == 0, "0", to_string(b2));
        const Rat l1 = (lj - zp.r(lo)) * le;
        add_check(rep.entries, "L1 @ " + m.name(), l1 == 0, "0", to_string(l1));
        const Rat l2 = zp.t(lo) * le;
        add_check(rep.entries, "L2 @ " + m.name(), l2 == 0, "0", to_string(l2));
    }

    add_check(rep.entries, "fitted r(x) equals closed form", zp.r == r_closed_form(k),
              r_closed_form(k).str(), zp.r.str());

    const Poly prop512 = -zp.p - zp.q * w4 + w4 * w4;
    add_check(rep.entries, "-p - q(4x^2-x) + (4x^2-x)^2 = 0", prop512.is_zero(), "0",
              prop512.str());

    const Rat den = Rat(4 * k - 1) * (4 * k - 9);
    {
        const Poly lhs = zp.q - zp.r + x - Rat(4) * x * x;
        const Rat c = Rat(9) * (-12 + 65 * k - 33 * k * k) / (280 * den);
        const Poly rhs = c * Poly({Rat(-1), Rat(16)}) * Poly({Rat(-9), Rat(16)});
        add_check(rep.entries, "q - r + x - 4x^2 factorization", lhs == rhs, rhs.str(),
                  lhs.str());
    }
    {
        const Rat lhs = zp.b(Rat(1));
        const Rat rhs = Rat(k - 4) * (29 * k - 9) / (8 * den) * zp.a(Rat(1));
        add_check(rep.entries, "b(1) = (k-4)(29k-9)/(8(4k-1)(4k-9)) a(1)", lhs == rhs,
                  to_string(rhs), to_string(lhs));
    }
    {
        const Poly lhs = zp.r - Rat(4) * x * x + x;
        const Poly rhs = ratio(9, 8) / den *
                         (Poly({Rat(-k), Rat(4)}) *
                          Poly({Rat(3 - 3 * k), Rat(32 * k - 12)}));
        add_check(rep.entries, "r - 4x^2 + x factorization", lhs == rhs, rhs.str(), lhs.str());
    }
    {
        const Rat node = Rat(3 * k - 3) / Rat(32 * k - 12);
        const Rat val = zp.phi(node);
        add_check(rep.entries, "phi((3k-3)/(32k-12)) != 0", val != 0, "nonzero",
                  to_string(val));
    }
    {
        const std::string cls = square_class_of(k);
        const Rat b1 = zp.b(Rat(1)), b16 = zp.b(ratio(1, 16)), b916 = zp.b(ratio(9, 16));
        bool pass = false;
        if (cls == "non-square")
            pass = b1 != 0 && b16 != 0 && b916 != 0;
        else if (cls == "even-square")
            pass = b1 == 0 && b16 == 0 && b916 == 0;
        else
            pass = b1 == 0 && b16 != 0 && b916 != 0;
        std::ostringstream actual;
        actual << "b(1)=" << b1 << ", b(1/16)=" << b16 << ", b(9/16)=" << b916;
        add_check(rep.entries, "b trichotomy (" + cls + ")", pass, cls, actual.str());
    }
    {
        // Lemma 5.4: E*E as an explicit state.
        const LatticeState lhs = star(em_state(1, k), em_state(1, k));
        LatticeState rhs(k);
        for (int j = 0; j <= k; ++j)
            rhs += LatticeState::from_fock(binom_gen(k, j) * schur_q(2 * k - j, Rat(1)), k);
        add_check(rep.entries, "E*E = sum binom(k,j) q_{2k-j}(a)", lhs == rhs, rhs.str(),
                  lhs.str());
    }
    return rep;
}

BasisCertificate zhu_basis_certificate(int k) {
    if (k < 2) throw std::invalid_argument("zhu_basis_certificate: k must be >= 2");
    BasisCertificate cert;
    cert.k = k;
    cert.square_class = square_class_of(k);
    if (cert.square_class == "non-square") {
        for (int s = 0; s <= k + 3; ++s) cert.basis.push_back({s, 0, 0});
        for (int s = 0; s <= 2; ++s) cert.basis.push_back({s, 0, 1});
    } else if (cert.square_class == "even-square") {
        for (int s = 0; s <= k; ++s) cert.basis.push_back({s, 0, 0});
        for (int s = 0; s <= 2; ++s) cert.basis.push_back({s, 1, 0});
        for (int s = 0; s <= 2; ++s) cert.basis.push_back({s, 0, 1});
    } else {
        for (int s = 0; s <= k + 2; ++s) cert.basis.push_back({s, 0, 0});
        cert.basis.push_back({0, 1, 0});
        for (int s = 0; s <= 2; ++s) cert.basis.push_back({s, 0, 1});
    }
    const auto catalog = module_catalog(k);
    if (cert.basis.size() != catalog.size())
        throw std::logic_error("basis size does not match module count");

    const std::size_t n = catalog.size();
    cert.eval = MatQ(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto [s, t, u] = cert.basis[j];
            cert.eval.at(i, j) = rat_pow(catalog[i].lam_omega, s) *
                                 rat_pow(catalog[i].lam_J, t) *
                                 rat_pow(catalog[i].lam_E, u);
        }
    cert.det = determinant(cert.eval);

    cert.characters_distinct = true;
    for (std::size_t i = 0; i < n && cert.characters_distinct; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (catalog[i].lam_omega == catalog[j].lam_omega &&
                catalog[i].lam_E == catalog[j].lam_E &&
                catalog[i].lam_J == catalog[j].lam_J) {
                cert.characters_distinct = false;
                break;
            }
        }
    cert.pass = cert.det != 0 && cert.characters_distinct;
    return cert;
}

LatticeState l1_target(int k) {
    const LatticeState e = em_state(1, k);
    return star(j_lattice(k), e) - poly_star(r_closed_form(k), e);
}

LatticeState l2_target(int k) {
    return omega_poly_star({ratio(k, 4), ratio(1, 16), ratio(9, 16)}, em_state(1, k));
}

namespace {

using SparseVec = std::map<int, Rat>;

SparseVec to_sparse(const LatticeState& s, std::map<LatticeTerm, int>& coords) {
    SparseVec v;
    for (const auto& [t, c] : s.terms()) {
        auto [it, inserted] = coords.try_emplace(t, static_cast<int>(coords.size()));
        v[it->second] = c;
    }
    return v;
}

struct EchelonRow {
    SparseVec vec;                  // normalized: vec[pivot] == 1
    std::map<std::size_t, Rat> combo;  // in terms of original generators
};

// Reduce v (with its combo) against rows; returns remaining vector.
void reduce_against(std::map<int, EchelonRow>& rows, SparseVec& v,
                    std::map<std::size_t, Rat>& combo) {
    while (!v.empty()) {
        const int p = v.begin()->first;
        auto it = rows.find(p);
        if (it == rows.end()) return;
        const Rat f = v.begin()->second;
        for (const auto& [j, c] : it->second.vec) {
            auto vj = v.find(j);
            if (vj == v.end()) {
                v[j] = -f * c;
            } else {
                vj->second -= f * c;
                if (vj->second == 0) v.erase(vj);
            }
        }
        for (const auto& [g, c] : it->second.combo) {
            combo[g] -= f * c;
            if (combo[g] == 0) combo.erase(g);
        }
    }
}

void insert_row(std::map<int, EchelonRow>& rows, SparseVec v,
                std::map<std::size_t, Rat> combo) {
    reduce_against(rows, v, combo);
    if (v.empty()) return;
    const int p = v.begin()->first;
    const Rat lead = v.begin()->second;
    for (auto& [j, c] : v) c /= lead;
    for (auto& [g, c] : combo) c /= lead;
    rows.emplace(p, EchelonRow{std::move(v), std::move(combo)});
}

}  // namespace

std::optional<OVCertificate> certify_in_OV(const LatticeState& target, long cutoff) {
    const int k = target.k();
    if (!(theta(target) == target))
        throw std::invalid_argument("certify_in_OV: target must be theta-invariant");
    OVCertificate cert;
    cert.cutoff = cutoff;
    if (target.is_zero()) return cert;
    if (Rat(cutoff) < target.weights().front())
        throw std::invalid_argument("certify_in_OV: cutoff below target top weight");

    // Candidate generators: theta-invariant monomial pairs (u, v) with
    // wt u + wt v + n + 1 <= cutoff, so every output stays inside the window.
    struct GenSpec {
        LatticeState u, v;
        long n;
    };
    std::vector<GenSpec> specs;
    int max_sector = 0;
    while (static_cast<long>(k) * (max_sector + 1) * (max_sector + 1) + 1 <= cutoff)
        ++max_sector;
    for (int mu = 0; mu <= max_sector; ++mu)
        for (long wu = std::max(1l, static_cast<long>(k) * mu * mu); wu + 1 <= cutoff; ++wu) {
            const auto ub = vlplus_sector_basis(k, mu, static_cast<int>(wu));
            if (ub.empty()) continue;
            for (int mv = 0; mv <= max_sector; ++mv)
                for (long wv = static_cast<long>(k) * mv * mv; wu + wv + 1 <= cutoff; ++wv) {
                    const auto vb = vlplus_sector_basis(k, mv, static_cast<int>(wv));
                    if (vb.empty()) continue;
                    for (long n = 0; wu + wv + n + 1 <= cutoff; ++n)
                        for (const auto& u : ub)
                            for (const auto& v : vb) specs.push_back({u, v, n});
                }
        }

    std::map<LatticeTerm, int> coords;
    std::map<int, EchelonRow> rows;
    std::vector<OVCertEntry> gens;

    auto try_target = [&]() -> std::optional<OVCertificate> {
        SparseVec tv = to_sparse(target, coords);
        std::map<std::size_t, Rat> combo;
        reduce_against(rows, tv, combo);
        if (!tv.empty()) return std::nullopt;
        OVCertificate out;
        out.cutoff = cutoff;
        for (const auto& [g, c] : combo) {
            OVCertEntry e = gens[g];
            e.c = -c;  // combo tracks target - sum, so flip
            if (e.c != 0) out.entries.push_back(std::move(e));
        }
        return out;
    };

    std::size_t processed = 0;
    for (const auto& spec : specs) {
        LatticeState g = ov_residue(spec.u, spec.v, spec.n);
        if (g.is_zero()) continue;
        const std::size_t idx = gens.size();
        gens.push_back({spec.u, spec.v, spec.n, Rat(1)});
        SparseVec v = to_sparse(g, coords);
        insert_row(rows, std::move(v), {{idx, Rat(1)}});
        if (++processed % 64 == 0) {
            if (auto found = try_target()) return found;
        }
    }
    return try_target();
}

ClassificationReport classify(int k) {
    if (k < 1) throw std::invalid_argument("classify: k must be positive");
    ClassificationReport rep;
    rep.k = k;
    if (k == 1) {
        rep.special_k1 = true;
        rep.notice = k1_notice();
        rep.dim = 8;  // irreducible module count carried over from the k=4 model
        return rep;
    }
    rep.modules = module_catalog(k);
    rep.basis = zhu_basis_certificate(k);
    rep.dim = static_cast<int>(rep.modules.size());
    rep.commutative_semisimple = rep.basis.pass;
    return rep;
}

}  // namespace vlplus
