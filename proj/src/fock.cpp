#include "vlplus/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace vlplus {

HeisMonomial::HeisMonomial(std::vector<int> levels) : levels_(std::move(levels)) {
    for (int n : levels_)
        if (n < 1) throw std::invalid_argument("HeisMonomial: levels must be >= 1");
    std::sort(levels_.begin(), levels_.end(), std::greater<int>());
}

int HeisMonomial::weight() const {
    int w = 0;
    for (int n : levels_) w += n;
    return w;
}

int HeisMonomial::count(int n) const {
    return static_cast<int>(std::count(levels_.begin(), levels_.end(), n));
}

HeisMonomial HeisMonomial::with_level(int n) const {
    std::vector<int> ls = levels_;
    ls.insert(std::lower_bound(ls.begin(), ls.end(), n, std::greater<int>()), n);
    HeisMonomial out;
    out.levels_ = std::move(ls);
    return out;
}

HeisMonomial HeisMonomial::without_level(int n) const {
    std::vector<int> ls = levels_;
    auto it = std::find(ls.begin(), ls.end(), n);
    if (it == ls.end()) throw std::logic_error("HeisMonomial::without_level: level absent");
    ls.erase(it);
    HeisMonomial out;
    out.levels_ = std::move(ls);
    return out;
}

std::string HeisMonomial::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (i) os << " ";
        os << "a(-" << levels_[i] << ")";
    }
    return os.str();
}

FockVector FockVector::monomial(const HeisMonomial& m, const Rat& c) {
    FockVector v;
    v.add(m, c);
    return v;
}

void FockVector::add(const HeisMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat FockVector::coeff(const HeisMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool FockVector::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return false;
    return true;
}

int FockVector::weight() const {
    if (terms_.empty()) throw std::domain_error("FockVector::weight: zero vector");
    if (!is_homogeneous()) throw std::domain_error("FockVector::weight: not homogeneous");
    return terms_.begin()->first.weight();
}

std::vector<int> FockVector::weights() const {
    std::vector<int> ws;
    for (const auto& [m, c] : terms_) {
        int w = m.weight();
        if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
    }
    std::sort(ws.begin(), ws.end());
    return ws;
}

FockVector FockVector::component(int weight) const {
    FockVector out;
    for (const auto& [m, c] : terms_)
        if (m.weight() == weight) out.add(m, c);
    return out;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

FockVector& FockVector::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

std::string FockVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (m.length() > 0) os << " " << m.str();
    }
    return os.str();
}

FockVector apply_alpha(int n, const FockVector& v, int k) {
    if (k < 1) throw std::invalid_argument("apply_alpha: k must be positive");
    FockVector out;
    if (n == 0) return out;  // zero momentum on M(1)
    for (const auto& [m, c] : v.terms()) {
        if (n < 0) {
            out.add(m.with_level(-n), c);
        } else {
            const int mult = m.count(n);
            if (mult > 0) out.add(m.without_level(n), c * Rat(2 * k) * n * mult);
        }
    }
    return out;
}

namespace detail {

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n == 0 ? 1 : n);
    return out;
}

namespace {

struct AnnihResult {
    HeisMonomial mono;
    long zshift;  // always a nonpositive integer
    Rat coeff;
};

// Apply the right-moving part of one derivative factor d^(l-1) a(z): the zero
// mode reads the momentum 2ks, positive modes contract against the monomial.
void apply_factor_right(int level, const Rat& momentum, int k,
                        const std::vector<AnnihResult>& in, std::vector<AnnihResult>& out) {
    for (const auto& t : in) {
        if (momentum != 0) {
            Rat c = t.coeff * binom_gen(Rat(-1), level - 1) * momentum;
            if (c != 0) out.push_back({t.mono, t.zshift - level, c});
        }
        std::vector<int> seen;
        for (int j : t.mono.levels()) {
            if (std::find(seen.begin(), seen.end(), j) != seen.end()) continue;
            seen.push_back(j);
            Rat c = t.coeff * binom_gen(Rat(-j - 1), level - 1) * Rat(2 * k) * j * t.mono.count(j);
            if (c != 0) out.push_back({t.mono.without_level(j), t.zshift - j - level, c});
        }
    }
}

// Expand E^+(-m a, z) = exp(-m sum_j a(j) z^-j / j) against a monomial: each
// level j with multiplicity mu absorbs p <= mu quanta with weight
// (-2km)^p binom(mu, p).
void apply_exp_annihilators(long charge, int k, const std::vector<AnnihResult>& in,
                            std::vector<AnnihResult>& out) {
    for (const auto& t : in) {
        std::vector<AnnihResult> cur = {t};
        std::vector<int> distinct;
        for (int j : t.mono.levels())
            if (std::find(distinct.begin(), distinct.end(), j) == distinct.end())
                distinct.push_back(j);
        for (int j : distinct) {
            std::vector<AnnihResult> next;
            for (const auto& s : cur) {
                const int mu = s.mono.count(j);
                HeisMonomial m = s.mono;
                Rat pow = 1;
                for (int p = 0; p <= mu; ++p) {
                    next.push_back({m, s.zshift - static_cast<long>(j) * p,
                                    s.coeff * pow * binom_gen(Rat(mu), p)});
                    if (p < mu) {
                        m = m.without_level(j);
                        pow *= Rat(-2 * k) * charge;
                    }
                }
            }
            cur = std::move(next);
        }
        for (auto& s : cur) out.push_back(std::move(s));
    }
}

}  // namespace

std::map<HeisMonomial, Rat> untwisted_mode_term(const std::vector<int>& factor_levels,
                                                long charge, const HeisMonomial& target,
                                                const Rat& label, const Rat& mode, int k) {
    std::map<HeisMonomial, Rat> result;
    const int r = static_cast<int>(factor_levels.size());
    const Rat base_exp = Rat(2 * k) * charge * label;  // from z^{m alpha(0)}
    const Rat momentum = Rat(2 * k) * label;           // zero-mode eigenvalue before e_{m a}
    const Rat target_exp = -mode - 1;

    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        // Right-moving cluster: factors outside the mask plus E^+.
        std::vector<AnnihResult> annih = {{target, 0, Rat(1)}};
        for (int i = 0; i < r; ++i) {
            if (mask & (1u << i)) continue;
            std::vector<AnnihResult> next;
            apply_factor_right(factor_levels[i], momentum, k, annih, next);
            annih = std::move(next);
            if (annih.empty()) break;
        }
        if (charge != 0 && !annih.empty()) {
            std::vector<AnnihResult> next;
            apply_exp_annihilators(charge, k, annih, next);
            annih = std::move(next);
        }

        std::vector<int> creators;
        long creator_level_sum = 0;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) {
                creators.push_back(factor_levels[i]);
                creator_level_sum += factor_levels[i];
            }

        for (const auto& t : annih) {
            // Left-moving cluster must supply total creation weight T.
            const Rat t_rat = target_exp - base_exp - Rat(t.zshift) + Rat(creator_level_sum);
            if (denominator(t_rat) != 1) continue;
            const Int t_int = numerator(t_rat);
            if (t_int < 0) continue;
            const long T = static_cast<long>(t_int);

            // Ordered mode choices a_i >= l_i for the creator factors, the
            // remainder (if charged) as an E^- partition.
            std::function<void(std::size_t, long, const HeisMonomial&, const Rat&)> assign =
                [&](std::size_t idx, long rem, const HeisMonomial& mono, const Rat& coeff) {
                    if (idx == creators.size()) {
                        if (charge == 0) {
                            if (rem == 0) {
                                auto [it, ins] = result.try_emplace(mono, coeff);
                                if (!ins) it->second += coeff;
                            }
                            return;
                        }
                        for (const auto& part : partitions_of(static_cast<int>(rem))) {
                            HeisMonomial m2 = mono;
                            Rat c2 = coeff;
                            int run = 0, prev = 0;
                            for (int p : part) {
                                m2 = m2.with_level(p);
                                c2 *= Rat(charge) / p;
                                run = (p == prev) ? run + 1 : 1;
                                prev = p;
                                c2 /= run;  // accumulates 1/q! per repeated part
                            }
                            auto [it, ins] = result.try_emplace(m2, c2);
                            if (!ins) it->second += c2;
                        }
                        return;
                    }
                    const int l = creators[idx];
                    for (long a = l; a <= rem; ++a) {
                        Rat c = coeff * binom_gen(Rat(a - 1), l - 1);
                        if (c == 0) continue;
                        assign(idx + 1, rem - a, mono.with_level(static_cast<int>(a)), c);
                    }
                };
            assign(0, T, t.mono, t.coeff);
        }
    }

    for (auto it = result.begin(); it != result.end();)
        it = (it->second == 0) ? result.erase(it) : std::next(it);
    return result;
}

}  // namespace detail

FockVector heis_vertex_mode(const FockVector& u, const Rat& n, const FockVector& w, int k) {
    if (k < 1) throw std::invalid_argument("heis_vertex_mode: k must be positive");
    if (!u.is_homogeneous()) throw std::invalid_argument("heis_vertex_mode: u not homogeneous");
    FockVector out;
    for (const auto& [hu, cu] : u.terms())
        for (const auto& [hw, cw] : w.terms()) {
            auto partial = detail::untwisted_mode_term(hu.levels(), 0, hw, Rat(0), n, k);
            for (const auto& [m, c] : partial) out.add(m, cu * cw * c);
        }
    return out;
}

FockVector schur_p(int j, const Rat& c) {
    if (j < 0) throw std::invalid_argument("schur_p: j must be nonnegative");
    FockVector out;
    for (const auto& part : detail::partitions_of(j)) {
        Rat coeff = 1;
        int run = 0, prev = 0;
        std::vector<int> levels;
        for (int p : part) {
            levels.push_back(p);
            coeff *= c / p;
            run = (p == prev) ? run + 1 : 1;
            prev = p;
            coeff /= run;
        }
        out.add(HeisMonomial(levels), coeff);
    }
    return out;
}

FockVector schur_q(int j, const Rat& c) { return schur_p(j, c) + schur_p(j, -c); }

FockVector theta_project(const FockVector& v, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("theta_project: sign must be +-1");
    FockVector out;
    for (const auto& [m, c] : v.terms())
        if (m.parity() == sign) out.add(m, c);
    return out;
}

FockVector vacuum_state() { return FockVector::vacuum(); }

FockVector omega_state(int k) {
    FockVector v;
    v.add(HeisMonomial({1, 1}), ratio(1, 4l * k));
    return v;
}

FockVector j_state(int k) {
    FockVector v;
    v.add(HeisMonomial({1, 1, 1, 1}), ratio(1, 4l * k * k));
    v.add(HeisMonomial({3, 1}), ratio(-1, k));
    v.add(HeisMonomial({2, 2}), ratio(3, 4l * k));
    return v;
}

std::vector<HeisMonomial> heis_partitions(int weight) {
    std::vector<HeisMonomial> out;
    for (const auto& part : detail::partitions_of(weight)) out.push_back(HeisMonomial(part));
    return out;
}

}  // namespace vlplus
