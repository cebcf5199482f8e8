#include "vlplus/expr.hpp"

#include "vlplus/zhu.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace vlplus {

namespace {

struct Token {
    enum class Kind { Number, Name, LParen, RParen, Comma, Plus, Minus, Star, End } kind;
    Rat number;
    std::string name;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::Kind::End, Rat(0), ""};
            return;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            Int num(s_.substr(start, pos_ - start));
            Int den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                std::size_t save = pos_++;
                std::size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
                if (pos_ == dstart) {
                    pos_ = save;  // a lone '/', not a fraction
                } else {
                    den = Int(s_.substr(dstart, pos_ - dstart));
                }
            }
            tok_ = {Token::Kind::Number, ratio(num, den), ""};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Kind::Name, Rat(0), s_.substr(start, pos_ - start)};
            return;
        }
        ++pos_;
        switch (c) {
            case '(': tok_ = {Token::Kind::LParen, Rat(0), ""}; return;
            case ')': tok_ = {Token::Kind::RParen, Rat(0), ""}; return;
            case ',': tok_ = {Token::Kind::Comma, Rat(0), ""}; return;
            case '+': tok_ = {Token::Kind::Plus, Rat(0), ""}; return;
            case '-': tok_ = {Token::Kind::Minus, Rat(0), ""}; return;
            case '*': tok_ = {Token::Kind::Star, Rat(0), ""}; return;
            default:
                throw std::invalid_argument(std::string("unexpected character '") + c +
                                            "' in expression");
        }
    }

    std::string s_;
    std::size_t pos_ = 0;
    Token tok_;
};

// A factor is either a value or a pending mode operator a(n).
struct Factor {
    bool is_mode = false;
    int mode = 0;
    bool is_scalar = false;
    Rat scalar;
    LatticeState state;

    explicit Factor(int k) : state(k) {}
};

class Parser {
public:
    Parser(const std::string& text, int k) : lex_(text), k_(k) {}

    EvalResult parse() {
        EvalResult r = parse_sum();
        if (lex_.peek().kind != Token::Kind::End)
            throw std::invalid_argument("trailing input in expression");
        return r;
    }

private:
    EvalResult parse_sum() {
        bool negate = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            negate = true;
        }
        EvalResult acc = parse_term();
        if (negate) {
            if (acc.is_scalar)
                acc.scalar = -acc.scalar;
            else
                acc.state *= Rat(-1);
        }
        while (lex_.peek().kind == Token::Kind::Plus ||
               lex_.peek().kind == Token::Kind::Minus) {
            const bool minus = lex_.take().kind == Token::Kind::Minus;
            EvalResult rhs = parse_term();
            if (acc.is_scalar != rhs.is_scalar)
                throw std::invalid_argument("cannot add a scalar and a state");
            if (acc.is_scalar)
                acc.scalar += minus ? -rhs.scalar : rhs.scalar;
            else
                acc.state += minus ? -rhs.state : rhs.state;
        }
        return acc;
    }

    bool starts_factor() const {
        switch (lex_.peek().kind) {
            case Token::Kind::Number:
            case Token::Kind::Name:
            case Token::Kind::LParen:
                return true;
            default:
                return false;
        }
    }

    EvalResult parse_term() {
        std::vector<Factor> factors;
        factors.push_back(parse_factor());
        while (true) {
            if (lex_.peek().kind == Token::Kind::Star) {
                lex_.take();
                factors.push_back(parse_factor());
            } else if (starts_factor()) {
                factors.push_back(parse_factor());
            } else {
                break;
            }
        }
        // Fold right to left: modes and scalars act on the value to their right.
        Factor acc = factors.back();
        if (acc.is_mode) throw std::invalid_argument("a(n) must be applied to a state");
        for (std::size_t i = factors.size() - 1; i-- > 0;) {
            const Factor& f = factors[i];
            if (f.is_mode) {
                if (acc.is_scalar) throw std::invalid_argument("a(n) applied to a scalar");
                acc.state = lattice_apply_alpha(f.mode, acc.state);
            } else if (f.is_scalar) {
                if (acc.is_scalar)
                    acc.scalar *= f.scalar;
                else
                    acc.state *= f.scalar;
            } else {
                if (!acc.is_scalar)
                    throw std::invalid_argument(
                        "juxtaposition of two states; use star(u,v) or circ(u,v)");
                Factor out(k_);
                out.state = f.state * acc.scalar;
                acc = out;
            }
        }
        EvalResult r(k_);
        r.is_scalar = acc.is_scalar;
        r.scalar = acc.scalar;
        r.state = acc.state;
        return r;
    }

    Rat parse_rational_arg() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            neg = true;
        }
        if (lex_.peek().kind != Token::Kind::Number)
            throw std::invalid_argument("expected a number");
        Rat v = lex_.take().number;
        return neg ? -v : v;
    }

    long parse_int_arg() {
        const Rat v = parse_rational_arg();
        if (denominator(v) != 1) throw std::invalid_argument("expected an integer");
        return static_cast<long>(numerator(v));
    }

    void expect(Token::Kind kind, const char* what) {
        if (lex_.take().kind != kind)
            throw std::invalid_argument(std::string("expected ") + what);
    }

    Factor parse_factor() {
        Factor f(k_);
        const Token t = lex_.take();
        if (t.kind == Token::Kind::Number) {
            f.is_scalar = true;
            f.scalar = t.number;
            return f;
        }
        if (t.kind == Token::Kind::LParen) {
            EvalResult inner = parse_sum();
            expect(Token::Kind::RParen, "')'");
            f.is_scalar = inner.is_scalar;
            f.scalar = inner.scalar;
            f.state = inner.state;
            return f;
        }
        if (t.kind != Token::Kind::Name)
            throw std::invalid_argument("expected a factor");
        const std::string& n = t.name;
        if (n == "one") {
            f.state = vacuum_lattice(k_);
        } else if (n == "omega") {
            f.state = omega_lattice(k_);
        } else if (n == "J") {
            f.state = j_lattice(k_);
        } else if (n == "E") {
            f.state = em_state(1, k_);
        } else if (n == "F") {
            f.state = fm_state(1, k_);
        } else if (n == "Em" || n == "Fm") {
            expect(Token::Kind::LParen, "'('");
            const long m = parse_int_arg();
            expect(Token::Kind::RParen, "')'");
            f.state = n == "Em" ? em_state(static_cast<int>(m), k_)
                                : fm_state(static_cast<int>(m), k_);
        } else if (n == "a") {
            expect(Token::Kind::LParen, "'('");
            f.is_mode = true;
            f.mode = static_cast<int>(parse_int_arg());
            expect(Token::Kind::RParen, "')'");
        } else if (n == "e") {
            expect(Token::Kind::LParen, "'('");
            const Rat r = parse_rational_arg();
            expect(Token::Kind::RParen, "')'");
            f.state = LatticeState::exponential(k_, r);
        } else if (n == "star" || n == "circ") {
            expect(Token::Kind::LParen, "'('");
            EvalResult u = parse_sum();
            expect(Token::Kind::Comma, "','");
            EvalResult v = parse_sum();
            expect(Token::Kind::RParen, "')'");
            if (u.is_scalar || v.is_scalar)
                throw std::invalid_argument(n + " expects two states");
            f.state = n == "star" ? star(u.state, v.state) : circ(u.state, v.state);
        } else {
            throw std::invalid_argument("unknown name '" + n + "' in expression");
        }
        return f;
    }

    Lexer lex_;
    int k_;
};

}  // namespace

EvalResult eval_expr(const std::string& text, int k) { return Parser(text, k).parse(); }

std::string print_state(const LatticeState& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : s.terms()) {
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "- ";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (mag != 1) os << mag << " ";
        os << (t.mono.length() > 0 ? t.mono.str() + " " : "");
        if (t.label == 0)
            os << "one";
        else
            os << "e(" << t.label << ")";
    }
    return os.str();
}

LatticeState parse_state(const std::string& text, int k) {
    EvalResult r = eval_expr(text, k);
    if (r.is_scalar) {
        LatticeState s = vacuum_lattice(k);
        s *= r.scalar;
        return s;
    }
    return r.state;
}

}  // namespace vlplus
