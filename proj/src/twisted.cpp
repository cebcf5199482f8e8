#include "vlplus/twisted.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace vlplus {

TwistedMonomial::TwistedMonomial(std::vector<int> doubled_levels)
    : dlevels_(std::move(doubled_levels)) {
    for (int d : dlevels_)
        if (d < 1 || d % 2 == 0)
            throw std::invalid_argument("TwistedMonomial: doubled levels must be odd positive");
    std::sort(dlevels_.begin(), dlevels_.end(), std::greater<int>());
}

Rat TwistedMonomial::weight_above_top() const {
    long s = 0;
    for (int d : dlevels_) s += d;
    return ratio(s, 2);
}

int TwistedMonomial::count(int dlevel) const {
    return static_cast<int>(std::count(dlevels_.begin(), dlevels_.end(), dlevel));
}

TwistedMonomial TwistedMonomial::with_dlevel(int dlevel) const {
    std::vector<int> ls = dlevels_;
    ls.insert(std::lower_bound(ls.begin(), ls.end(), dlevel, std::greater<int>()), dlevel);
    TwistedMonomial out;
    out.dlevels_ = std::move(ls);
    return out;
}

TwistedMonomial TwistedMonomial::without_dlevel(int dlevel) const {
    std::vector<int> ls = dlevels_;
    auto it = std::find(ls.begin(), ls.end(), dlevel);
    if (it == ls.end()) throw std::logic_error("TwistedMonomial: level absent");
    ls.erase(it);
    TwistedMonomial out;
    out.dlevels_ = std::move(ls);
    return out;
}

std::string TwistedMonomial::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < dlevels_.size(); ++i) {
        if (i) os << " ";
        os << "a(-" << dlevels_[i] << "/2)";
    }
    return os.str();
}

TwistedState::TwistedState(int k, int sector) : k_(k), sector_(sector) {
    if (k < 1) throw std::invalid_argument("TwistedState: k must be positive");
    if (sector != 1 && sector != 2) throw std::invalid_argument("TwistedState: sector in {1,2}");
}

TwistedState TwistedState::top(int k, int sector) {
    TwistedState s(k, sector);
    s.add(TwistedMonomial{}, 1);
    return s;
}

void TwistedState::add(const TwistedMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat TwistedState::coeff(const TwistedMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

TwistedState& TwistedState::operator+=(const TwistedState& o) {
    if (k_ != o.k_ || sector_ != o.sector_)
        throw std::invalid_argument("TwistedState: mixed k or sector");
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

TwistedState& TwistedState::operator-=(const TwistedState& o) {
    if (k_ != o.k_ || sector_ != o.sector_)
        throw std::invalid_argument("TwistedState: mixed k or sector");
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

TwistedState& TwistedState::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

std::string TwistedState::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (m.length() > 0) os << " " << m.str();
        os << " t" << sector_;
    }
    return os.str();
}

TwistedState twisted_apply_alpha(const Rat& n, const TwistedState& v) {
    const Rat dn = n * 2;
    if (denominator(dn) != 1 || numerator(dn) % 2 == 0)
        throw std::invalid_argument("twisted_apply_alpha: mode must be half-odd");
    const long d = static_cast<long>(numerator(dn));
    const int k = v.k();
    TwistedState out(v.k(), v.sector());
    for (const auto& [m, c] : v.terms()) {
        if (d < 0) {
            out.add(m.with_dlevel(static_cast<int>(-d)), c);
        } else {
            const int mult = m.count(static_cast<int>(d));
            if (mult > 0)
                out.add(m.without_dlevel(static_cast<int>(d)), c * Rat(k) * d * mult);
        }
    }
    return out;
}

namespace {

constexpr int kDeltaDegree = 16;

// Triangular table of the Delta_z generating-function coefficients.
const std::vector<std::vector<Rat>>& delta_table() {
    static const std::vector<std::vector<Rat>> table = [] {
        const int D = kDeltaDegree;
        // g(x,y) = ((1+x)^{1/2} + (1+y)^{1/2})/2 - 1, truncated past total degree D.
        std::vector<std::vector<Rat>> g(D + 1, std::vector<Rat>(D + 1, Rat(0)));
        for (int i = 1; i <= D; ++i) {
            Rat s = binom_gen(ratio(1, 2), i) / 2;
            g[i][0] += s;
            g[0][i] += s;
        }
        auto mul = [D](const std::vector<std::vector<Rat>>& a,
                       const std::vector<std::vector<Rat>>& b) {
            std::vector<std::vector<Rat>> out(D + 1, std::vector<Rat>(D + 1, Rat(0)));
            for (int i = 0; i <= D; ++i)
                for (int j = 0; i + j <= D; ++j) {
                    if (a[i][j] == 0) continue;
                    for (int p = 0; i + p <= D; ++p)
                        for (int q = 0; i + j + p + q <= D; ++q) {
                            if (b[p][q] == 0) continue;
                            out[i + p][j + q] += a[i][j] * b[p][q];
                        }
                }
            return out;
        };
        // -log(1+g) = sum_{t>=1} (-1)^t g^t / t.
        std::vector<std::vector<Rat>> acc(D + 1, std::vector<Rat>(D + 1, Rat(0)));
        std::vector<std::vector<Rat>> pw = g;
        for (int t = 1; t <= D; ++t) {
            const Rat c = ratio(t % 2 == 0 ? 1 : -1, t);
            for (int i = 0; i <= D; ++i)
                for (int j = 0; i + j <= D; ++j) acc[i][j] += c * pw[i][j];
            if (t < D) pw = mul(pw, g);
        }
        return acc;
    }();
    return table;
}

}  // namespace

Rat delta_coeff(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("delta_coeff: negative index");
    if (m + n > kDeltaDegree)
        throw std::invalid_argument("delta_coeff: degree beyond precomputed table");
    return delta_table()[m][n];
}

namespace {

struct CorrectedTerm {
    HeisMonomial mono;
    int deg;  // carries z^{-deg}
    Rat coeff;
};

// Apply a(p) (untwisted, integer mode) with zero mode reading the momentum of
// the exponential part.
void apply_untwisted_annihilator(int p, long charge, int k,
                                 std::vector<CorrectedTerm>& terms) {
    std::vector<CorrectedTerm> out;
    for (const auto& t : terms) {
        if (p == 0) {
            if (charge != 0)
                out.push_back({t.mono, t.deg, t.coeff * Rat(2 * k) * charge});
        } else {
            const int mult = t.mono.count(p);
            if (mult > 0)
                out.push_back(
                    {t.mono.without_level(p), t.deg, t.coeff * Rat(2 * k) * p * mult});
        }
    }
    terms = std::move(out);
}

// exp(Delta_z) applied to mono tensor e^{charge*alpha}; Delta_z =
// (1/2k) sum_{p,q>=0} c_{pq} a(p) a(q) z^{-p-q}.
std::vector<CorrectedTerm> exp_delta(const HeisMonomial& mono, long charge, int k) {
    std::vector<CorrectedTerm> total = {{mono, 0, Rat(1)}};
    std::vector<CorrectedTerm> cur = total;
    int order = 1;
    while (!cur.empty()) {
        std::vector<CorrectedTerm> next;
        for (const auto& t : cur) {
            std::vector<int> modes = {0};
            for (int l : t.mono.levels())
                if (std::find(modes.begin(), modes.end(), l) == modes.end())
                    modes.push_back(l);
            for (int p : modes)
                for (int q : modes) {
                    if (p == 0 && q == 0) continue;
                    const Rat c = delta_coeff(p, q);
                    if (c == 0) continue;
                    std::vector<CorrectedTerm> piece = {t};
                    apply_untwisted_annihilator(q, charge, k, piece);
                    apply_untwisted_annihilator(p, charge, k, piece);
                    for (auto& s : piece) {
                        s.deg += p + q;
                        s.coeff *= c / Rat(2 * k) / order;
                        next.push_back(std::move(s));
                    }
                }
        }
        // Merge duplicates to keep the expansion small.
        std::vector<CorrectedTerm> merged;
        for (auto& t : next) {
            bool found = false;
            for (auto& m : merged)
                if (m.deg == t.deg && m.mono == t.mono) {
                    m.coeff += t.coeff;
                    found = true;
                    break;
                }
            if (!found) merged.push_back(std::move(t));
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const CorrectedTerm& t) { return t.coeff == 0; }),
                     merged.end());
        cur = std::move(merged);
        total.insert(total.end(), cur.begin(), cur.end());
        ++order;
    }
    return total;
}

struct TwAnnih {
    TwistedMonomial mono;
    long dshift;  // doubled z-exponent, nonpositive
    Rat coeff;
};

// Right-moving part of d^(l-1) a^tw(z): modes a(dj/2), dj odd positive.
void tw_factor_right(int level, int k, const std::vector<TwAnnih>& in,
                     std::vector<TwAnnih>& out) {
    for (const auto& t : in) {
        std::vector<int> seen;
        for (int dj : t.mono.doubled_levels()) {
            if (std::find(seen.begin(), seen.end(), dj) != seen.end()) continue;
            seen.push_back(dj);
            // binom(-j-1, l-1) with j = dj/2, contraction 2k*j*mult = k*dj*mult.
            Rat c = t.coeff * binom_gen(ratio(-dj - 2, 2), level - 1) * Rat(k) * dj *
                    t.mono.count(dj);
            if (c != 0) out.push_back({t.mono.without_dlevel(dj), t.dshift - dj - 2 * level, c});
        }
    }
}

void tw_exp_annihilators(long charge, int k, const std::vector<TwAnnih>& in,
                         std::vector<TwAnnih>& out) {
    for (const auto& t : in) {
        std::vector<TwAnnih> cur = {t};
        std::vector<int> distinct;
        for (int dj : t.mono.doubled_levels())
            if (std::find(distinct.begin(), distinct.end(), dj) == distinct.end())
                distinct.push_back(dj);
        for (int dj : distinct) {
            std::vector<TwAnnih> next;
            for (const auto& s : cur) {
                const int mu = s.mono.count(dj);
                TwistedMonomial m = s.mono;
                Rat pow = 1;
                for (int p = 0; p <= mu; ++p) {
                    next.push_back({m, s.dshift - static_cast<long>(dj) * p,
                                    s.coeff * pow * binom_gen(Rat(mu), p)});
                    if (p < mu) {
                        m = m.without_dlevel(dj);
                        pow *= Rat(-2 * k) * charge;
                    }
                }
            }
            cur = std::move(next);
        }
        for (auto& s : cur) out.push_back(std::move(s));
    }
}

std::vector<std::vector<int>> odd_partitions_of(int dn) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        int start = std::min(rem, maxpart);
        if (start % 2 == 0) --start;
        for (int p = start; p >= 1; p -= 2) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    if (dn >= 0) rec(dn, dn == 0 ? 1 : dn);
    return out;
}

// One mode of W applied to a single twisted monomial: the normal-ordered
// product of the derivative factor fields, the twisted exponential pair (for
// charge != 0), the T_i scalar of e_{charge*a} and the z^{-k*charge^2} shift.
void tw_mode_term(const std::vector<int>& factor_levels, long charge, int sector,
                  const TwistedMonomial& target, long dneeded, int k, const Rat& scale,
                  TwistedState& out) {
    const int r = static_cast<int>(factor_levels.size());
    Rat prefactor = scale;
    if (charge != 0) {
        prefactor /= Rat(int_pow(2, static_cast<unsigned>(2 * k)));  // 2^{-<a,a>}
        if (sector == 2) prefactor = -prefactor;                     // e_{+-a} on T_2
        dneeded += 2l * k;  // compensate the z^{-k} in the operator
    }
    if (prefactor == 0) return;

    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<TwAnnih> annih = {{target, 0, Rat(1)}};
        for (int i = 0; i < r; ++i) {
            if (mask & (1u << i)) continue;
            std::vector<TwAnnih> next;
            tw_factor_right(factor_levels[i], k, annih, next);
            annih = std::move(next);
            if (annih.empty()) break;
        }
        if (charge != 0 && !annih.empty()) {
            std::vector<TwAnnih> next;
            tw_exp_annihilators(charge, k, annih, next);
            annih = std::move(next);
        }

        std::vector<int> creators;
        long creator_dlevels = 0;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) {
                creators.push_back(factor_levels[i]);
                creator_dlevels += 2l * factor_levels[i];
            }

        for (const auto& t : annih) {
            const long dT = dneeded - t.dshift + creator_dlevels;
            if (dT < 0) continue;
            // Parity: each creator mode and each E^- part is odd.
            std::function<void(std::size_t, long, const TwistedMonomial&, const Rat&)> assign =
                [&](std::size_t idx, long rem, const TwistedMonomial& mono, const Rat& coeff) {
                    if (idx == creators.size()) {
                        if (charge == 0) {
                            if (rem == 0) out.add(mono, prefactor * coeff);
                            return;
                        }
                        for (const auto& part : odd_partitions_of(static_cast<int>(rem))) {
                            TwistedMonomial m2 = mono;
                            Rat c2 = coeff;
                            int run = 0, prev = 0;
                            for (int dp : part) {
                                m2 = m2.with_dlevel(dp);
                                c2 *= Rat(2 * charge) / dp;  // charge / (dp/2)
                                run = (dp == prev) ? run + 1 : 1;
                                prev = dp;
                                c2 /= run;
                            }
                            out.add(m2, prefactor * c2);
                        }
                        return;
                    }
                    const int l = creators[idx];
                    for (long da = 1; da <= rem; da += 2) {
                        Rat c = coeff * binom_gen(ratio(da - 2, 2), l - 1);
                        if (c == 0) continue;
                        assign(idx + 1, rem - da, mono.with_dlevel(static_cast<int>(da)), c);
                    }
                };
            assign(0, dT, t.mono, t.coeff);
        }
    }
}

long doubled_mode(const Rat& n) {
    const Rat dn = n * 2;
    if (denominator(dn) != 1)
        throw std::invalid_argument("twisted mode index must lie in (1/2)Z");
    return static_cast<long>(numerator(dn));
}

}  // namespace

TwistedState twisted_exp_mode(int sign, const Rat& n, const TwistedState& w) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("twisted_exp_mode: sign +-1");
    const long dmode = doubled_mode(n);
    TwistedState out(w.k(), w.sector());
    for (const auto& [m, c] : w.terms())
        tw_mode_term({}, sign, w.sector(), m, -dmode - 2, w.k(), c, out);
    return out;
}

TwistedState twisted_heis_mode(const FockVector& u, const Rat& n, const TwistedState& w,
                               int k) {
    if (k != w.k()) throw std::invalid_argument("twisted_heis_mode: mixed k");
    return twisted_mixed_mode(LatticeState::from_fock(u, k), n, w);
}

TwistedState twisted_mixed_mode(const LatticeState& u, const Rat& n, const TwistedState& w) {
    if (u.k() != w.k()) throw std::invalid_argument("twisted_mixed_mode: mixed k");
    const int k = w.k();
    const long dmode = doubled_mode(n);
    TwistedState out(k, w.sector());
    for (const auto& [tu, cu] : u.terms()) {
        if (denominator(tu.label) != 1)
            throw std::invalid_argument("twisted_mixed_mode: non-integral label");
        const long charge = static_cast<long>(numerator(tu.label));
        if (charge < -1 || charge > 1)
            throw std::domain_error(
                "twisted_mixed_mode: exponential charges beyond +-1 are not supported");
        for (const auto& corr : exp_delta(tu.mono, charge, k)) {
            const long dneeded = -dmode - 2 + 2l * corr.deg;
            for (const auto& [mw, cw] : w.terms())
                tw_mode_term(corr.mono.levels(), charge, w.sector(), mw, dneeded, k,
                             cu * corr.coeff * cw, out);
        }
    }
    return out;
}

namespace {

Rat scalar_on_top(const TwistedState& result, const TwistedState& top) {
    // result must be an exact multiple of top.
    if (result.is_zero()) return Rat(0);
    const auto& [m0, c0] = *top.terms().begin();
    Rat lambda = result.coeff(m0) / c0;
    TwistedState check = top;
    check *= lambda;
    if (!(check == result))
        throw std::logic_error("twisted top level is not an eigenvector of o(u)");
    return lambda;
}

}  // namespace

std::array<Rat, 3> twisted_top_scalars(int k, int i, int parity) {
    if (k < 1) throw std::invalid_argument("twisted_top_scalars: k must be positive");
    if (i != 1 && i != 2) throw std::invalid_argument("twisted_top_scalars: i in {1,2}");
    if (parity != 1 && parity != -1)
        throw std::invalid_argument("twisted_top_scalars: parity +-1");
    TwistedState top(k, i);
    if (parity == 1)
        top.add(TwistedMonomial{}, 1);
    else
        top.add(TwistedMonomial({1}), 1);

    const Rat lam_omega = scalar_on_top(twisted_heis_mode(omega_state(k), 1, top, k), top);
    TwistedState oe = twisted_exp_mode(1, Rat(k - 1), top);
    oe += twisted_exp_mode(-1, Rat(k - 1), top);
    const Rat lam_e = scalar_on_top(oe, top);
    const Rat lam_j = scalar_on_top(twisted_heis_mode(j_state(k), 3, top, k), top);
    return {lam_omega, lam_e, lam_j};
}

Rat twisted_o_scalar(const LatticeState& u, int i, int parity) {
    const int k = u.k();
    TwistedState top(k, i);
    if (parity == 1)
        top.add(TwistedMonomial{}, 1);
    else
        top.add(TwistedMonomial({1}), 1);
    TwistedState acc(k, i);
    for (const Rat& w : u.weights()) {
        LatticeState comp = u.component(w);
        acc += twisted_mixed_mode(comp, w - 1, top);
    }
    return scalar_on_top(acc, top);
}

}  // namespace vlplus
