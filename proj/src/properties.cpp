#include "vlplus/properties.hpp"

#include "vlplus/fock.hpp"
#include "vlplus/lattice.hpp"
#include "vlplus/twisted.hpp"

#include <random>
#include <sstream>

namespace vlplus {

namespace {

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

HeisMonomial random_monomial(Rng& rng, int max_weight) {
    std::vector<int> levels;
    int budget = rand_int(rng, 0, max_weight);
    while (budget > 0) {
        int l = rand_int(rng, 1, budget);
        levels.push_back(l);
        budget -= l;
    }
    return HeisMonomial(levels);
}

FockVector random_fock(Rng& rng, int max_weight) {
    FockVector v;
    const int nterms = rand_int(rng, 1, 3);
    for (int i = 0; i < nterms; ++i) {
        Rat c = ratio(rand_int(rng, -4, 4), rand_int(rng, 1, 3));
        v.add(random_monomial(rng, max_weight), c);
    }
    return v;
}

LatticeState random_lattice(Rng& rng, int k, int max_weight) {
    LatticeState v(k);
    const int nterms = rand_int(rng, 1, 3);
    for (int i = 0; i < nterms; ++i) {
        const int label = rand_int(rng, -1, 1);
        const int heis_max = max_weight - k * label * label;
        Rat c = ratio(rand_int(rng, -4, 4), rand_int(rng, 1, 3));
        if (heis_max >= 0) v.add(random_monomial(rng, heis_max), Rat(label), c);
    }
    return v;
}

TwistedState random_twisted(Rng& rng, int k, int sector, int max_doubled_weight) {
    TwistedState v(k, sector);
    const int nterms = rand_int(rng, 1, 3);
    for (int i = 0; i < nterms; ++i) {
        std::vector<int> dl;
        int budget = rand_int(rng, 0, max_doubled_weight);
        while (budget > 0) {
            int l = rand_int(rng, 1, budget);
            if (l % 2 == 0) l -= 1;
            if (l < 1) break;
            dl.push_back(l);
            budget -= l;
        }
        Rat c = ratio(rand_int(rng, -4, 4), rand_int(rng, 1, 3));
        v.add(TwistedMonomial(dl), c);
    }
    return v;
}

void tally(std::vector<CheckEntry>& out, const std::string& name, int trials, int failures,
           const std::string& detail) {
    std::ostringstream actual;
    actual << failures << " failures / " << trials << " trials";
    out.push_back({name, failures == 0 ? "pass" : "fail", "0 failures", actual.str()});
    if (failures > 0 && !detail.empty()) out.back().actual += " (" + detail + ")";
}

}  // namespace

std::vector<CheckEntry> fock_commutator_suite(int k, unsigned seed, int trials) {
    std::vector<CheckEntry> out;
    Rng rng(seed);

    {  // [a(m), a(n)] = 2km delta_{m+n,0}
        int failures = 0;
        std::string detail;
        for (int t = 0; t < trials; ++t) {
            int m = rand_int(rng, -6, 6), n = rand_int(rng, -6, 6);
            if (m == 0) m = 1;
            if (n == 0) n = -1;
            const FockVector w = random_fock(rng, 10);
            FockVector lhs = apply_alpha(m, apply_alpha(n, w, k), k) -
                             apply_alpha(n, apply_alpha(m, w, k), k);
            FockVector rhs = (m + n == 0) ? Rat(2 * k) * Rat(m) * w : FockVector();
            if (!(lhs == rhs)) {
                ++failures;
                if (detail.empty()) detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        }
        tally(out, "Heisenberg bracket", trials, failures, detail);
    }

    const FockVector om = omega_state(k);
    auto L = [&](int m, const FockVector& w) { return heis_vertex_mode(om, Rat(m + 1), w, k); };

    {  // [L(m), L(n)] = (m-n) L(m+n) + (m^3-m)/12 delta_{m+n,0}, central charge 1
        int failures = 0;
        std::string detail;
        for (int t = 0; t < trials; ++t) {
            const int m = rand_int(rng, -4, 4), n = rand_int(rng, -4, 4);
            const FockVector w = random_fock(rng, 8);
            FockVector lhs = L(m, L(n, w)) - L(n, L(m, w));
            FockVector rhs = Rat(m - n) * L(m + n, w);
            if (m + n == 0) rhs += ratio(1l * m * m * m - m, 12) * w;
            if (!(lhs == rhs)) {
                ++failures;
                if (detail.empty()) detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        }
        tally(out, "Virasoro bracket (c=1)", trials, failures, detail);
    }

    const FockVector jj = j_state(k);
    auto Jn = [&](int n, const FockVector& w) { return heis_vertex_mode(jj, Rat(n), w, k); };

    {  // [L(m), J_n] = (3(m+1) - n) J_{m+n}
        int failures = 0;
        std::string detail;
        for (int t = 0; t < trials; ++t) {
            const int m = rand_int(rng, -3, 3), n = rand_int(rng, -3, 3);
            const FockVector w = random_fock(rng, 6);
            FockVector lhs = L(m, Jn(n, w)) - Jn(n, L(m, w));
            FockVector rhs = Rat(3 * (m + 1) - n) * Jn(m + n, w);
            if (!(lhs == rhs)) {
                ++failures;
                if (detail.empty()) detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        }
        tally(out, "[L(m), J_n] bracket", trials, failures, detail);
    }

    {  // Borcherds: [u_m, v_n] = sum_i binom(m,i) (u_i v)_{m+n-i} on u,v in {omega, J}
        int failures = 0;
        std::string detail;
        const int btrials = std::max(1, trials / 4);
        for (int t = 0; t < btrials; ++t) {
            const FockVector& u = (t % 2 == 0) ? om : jj;
            const FockVector& v = (t % 3 == 0) ? jj : om;
            const int m = rand_int(rng, -2, 3), n = rand_int(rng, -2, 3);
            const FockVector w = random_fock(rng, 6);
            auto mode = [&](const FockVector& x, int a, const FockVector& y) {
                return heis_vertex_mode(x, Rat(a), y, k);
            };
            FockVector lhs = mode(u, m, mode(v, n, w)) - mode(v, n, mode(u, m, w));
            FockVector rhs;
            const int bound = u.weight() + v.weight();
            for (int i = 0; i <= bound; ++i) {
                FockVector uv = mode(u, i, v);
                if (uv.is_zero()) continue;
                rhs += binom_gen(m, i) * mode(uv, m + n - i, w);
            }
            if (!(lhs == rhs)) {
                ++failures;
                if (detail.empty()) detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        }
        tally(out, "Borcherds commutator sample", btrials, failures, detail);
    }
    return out;
}

std::vector<CheckEntry> lattice_commutator_suite(int k, unsigned seed, int trials) {
    std::vector<CheckEntry> out;
    Rng rng(seed);
    const LatticeState om = omega_lattice(k);
    const LatticeState e = em_state(1, k);
    auto L = [&](int m, const LatticeState& w) { return vertex_mode(om, Rat(m + 1), w); };
    auto En = [&](int n, const LatticeState& w) { return vertex_mode(e, Rat(n), w); };

    {  // [L(m), E_n] = ((k-1)(m+1) - n) E_{m+n}
        int failures = 0;
        std::string detail;
        for (int t = 0; t < trials; ++t) {
            const int m = rand_int(rng, -3, 3), n = rand_int(rng, -3, 3);
            const LatticeState w = random_lattice(rng, k, 10);
            LatticeState lhs = L(m, En(n, w)) - En(n, L(m, w));
            LatticeState rhs = Rat((k - 1) * (m + 1) - n) * En(m + n, w);
            if (!(lhs == rhs)) {
                ++failures;
                if (detail.empty()) detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        }
        tally(out, "[L(m), E_n] bracket", trials, failures, detail);
    }

    {  // theta commutes with modes of theta-invariant states
        int failures = 0;
        for (int t = 0; t < std::max(1, trials / 4); ++t) {
            const int n = rand_int(rng, -3, 3);
            const LatticeState w = random_lattice(rng, k, 8);
            LatticeState lhs = theta(En(n, w));
            LatticeState rhs = En(n, theta(w));
            if (!(lhs == rhs)) ++failures;
        }
        tally(out, "theta equivariance of E modes", std::max(1, trials / 4), failures, "");
    }
    return out;
}

std::vector<CheckEntry> twisted_commutator_suite(int k, unsigned seed, int trials) {
    std::vector<CheckEntry> out;
    Rng rng(seed);

    {  // twisted Heisenberg bracket, m,n in 1/2 + Z
        int failures = 0;
        std::string detail;
        for (int t = 0; t < trials; ++t) {
            const int dm = 2 * rand_int(rng, -3, 2) + 1, dn = 2 * rand_int(rng, -3, 2) + 1;
            const Rat m = ratio(dm, 2), n = ratio(dn, 2);
            const int sector = rand_int(rng, 1, 2);
            const TwistedState w = random_twisted(rng, k, sector, 12);
            TwistedState lhs = twisted_apply_alpha(m, twisted_apply_alpha(n, w)) -
                               twisted_apply_alpha(n, twisted_apply_alpha(m, w));
            TwistedState rhs(k, sector);
            if (dm + dn == 0) rhs = (Rat(2 * k) * m) * w;
            if (!(lhs == rhs)) {
                ++failures;
                if (detail.empty()) detail = "m=" + to_string(m) + " n=" + to_string(n);
            }
        }
        tally(out, "twisted Heisenberg bracket", trials, failures, detail);
    }

    {  // twisted Virasoro bracket with c = 1
        int failures = 0;
        std::string detail;
        const FockVector om = omega_state(k);
        for (int t = 0; t < trials; ++t) {
            const int m = rand_int(rng, -3, 3), n = rand_int(rng, -3, 3);
            const int sector = rand_int(rng, 1, 2);
            const TwistedState w = random_twisted(rng, k, sector, 10);
            auto L = [&](int a, const TwistedState& x) {
                return twisted_heis_mode(om, Rat(a + 1), x, k);
            };
            TwistedState lhs = L(m, L(n, w)) - L(n, L(m, w));
            TwistedState rhs = Rat(m - n) * L(m + n, w);
            if (m + n == 0) rhs += ratio(1l * m * m * m - m, 12) * w;
            if (!(lhs == rhs)) {
                ++failures;
                if (detail.empty()) detail = "m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        }
        tally(out, "twisted Virasoro bracket (c=1)", trials, failures, detail);
    }
    return out;
}

std::vector<CheckEntry> twisted_table_suite(int k) {
    std::vector<CheckEntry> out;
    const Rat e_top = ratio(2, int_pow(Int(2), static_cast<unsigned>(2 * k)));  // 2^{-2k+1}
    const Rat e_above = -e_top * (4 * k - 1);
    struct Row {
        int i, parity;
        Rat lo, le, lj;
    };
    const Row expected[] = {
        {1, +1, ratio(1, 16), e_top, ratio(3, 128)},
        {1, -1, ratio(9, 16), e_above, ratio(-45, 128)},
        {2, +1, ratio(1, 16), -e_top, ratio(3, 128)},
        {2, -1, ratio(9, 16), -e_above, ratio(-45, 128)},
    };
    for (const auto& row : expected) {
        const auto [lo, le, lj] = twisted_top_scalars(k, row.i, row.parity);
        std::ostringstream name, want, got;
        name << "T" << row.i << (row.parity == 1 ? "+" : "-") << " scalars";
        want << "(" << row.lo << ", " << row.le << ", " << row.lj << ")";
        got << "(" << lo << ", " << le << ", " << lj << ")";
        const bool pass = lo == row.lo && le == row.le && lj == row.lj;
        out.push_back({name.str(), pass ? "pass" : "fail", want.str(), got.str()});
    }
    return out;
}

}  // namespace vlplus
