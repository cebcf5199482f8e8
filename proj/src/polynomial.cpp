#include "vlplus/polynomial.hpp"

#include <sstream>

namespace vlplus {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(int degree, const Rat& coeff) {
    if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    if (coeff == 0) return Poly();
    std::vector<Rat> c(static_cast<std::size_t>(degree) + 1, Rat(0));
    c.back() = coeff;
    return Poly(std::move(c));
}

Poly Poly::from_roots(const std::vector<Rat>& roots, const Rat& lead) {
    Poly p = Poly::constant(lead);
    for (const Rat& r : roots) p *= Poly({-r, Rat(1)});
    return p;
}

const Rat& Poly::lead() const {
    if (c_.empty()) throw std::domain_error("Poly::lead: zero polynomial");
    return c_.back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lead());
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rat c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        if (first && c < 0) os << "-";
        first = false;
        Rat a = c > 0 ? c : Rat(-c);
        if (a != 1 || i == 0) os << a;
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    Poly q;
    Poly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        Rat c = r.lead() / b.lead();
        Poly t = Poly::monomial(d, c);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

BezoutResult poly_gcd_bezout(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("poly_gcd_bezout: both inputs zero");
    // Invariants: r0 = u0*f + v0*g, r1 = u1*f + v1*g.
    Poly r0 = f, r1 = g;
    Poly u0 = Poly::constant(1), v0;
    Poly u1, v1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        Poly u2 = u0 - q * u1;
        Poly v2 = v0 - q * v1;
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u2;
        v0 = v1;
        v1 = v2;
    }
    Rat scale = Rat(1) / r0.lead();
    return {r0 * scale, u0 * scale, v0 * scale};
}

}  // namespace vlplus
