#include "orelab/i1/expr.hpp"

#include <cctype>

#include "orelab/errors.hpp"

namespace orelab::i1 {

namespace {

class Parser {
public:
    Parser(std::string_view s, bool b1) : s_(s), b1_(b1) {}

    std::unique_ptr<Expr> parse() {
        auto e = expr();
        skip();
        if (p_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[p_]) + "'", p_);
        return e;
    }

private:
    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    bool eat_utf8(std::string_view sym) {
        skip();
        if (s_.substr(p_, sym.size()) == sym) {
            p_ += sym.size();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", p_);
    }
    static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t pos) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->position = pos;
        return e;
    }
    static std::unique_ptr<Expr> binary(Expr::Kind k, std::size_t pos, std::unique_ptr<Expr> l,
                                        std::unique_ptr<Expr> r) {
        auto e = node(k, pos);
        e->args.push_back(std::move(l));
        e->args.push_back(std::move(r));
        return e;
    }

    mpz_class nat() {
        skip();
        const std::size_t start = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (start == p_) throw ParseError("expected a number", start);
        return mpz_class(std::string(s_.substr(start, p_ - start)));
    }
    long small_nat() {
        skip();
        const std::size_t start = p_;
        mpz_class n = nat();
        if (!n.fits_slong_p() || n > 100000) throw ParseError("number too large", start);
        return n.get_si();
    }

    std::unique_ptr<Expr> expr() {
        auto l = term();
        while (true) {
            skip();
            const std::size_t pos = p_;
            if (eat('+'))
                l = binary(Expr::Kind::add, pos, std::move(l), term());
            else if (eat('-'))
                l = binary(Expr::Kind::sub, pos, std::move(l), term());
            else
                return l;
        }
    }

    std::unique_ptr<Expr> term() {
        auto l = unary();
        while (true) {
            skip();
            const std::size_t pos = p_;
            if (!eat('*')) return l;
            l = binary(Expr::Kind::mul, pos, std::move(l), unary());
        }
    }

    std::unique_ptr<Expr> unary() {
        skip();
        const std::size_t pos = p_;
        if (eat('-')) {
            auto e = node(Expr::Kind::neg, pos);
            e->args.push_back(unary());
            return e;
        }
        return power();
    }

    std::unique_ptr<Expr> power() {
        auto base = atom();
        skip();
        const std::size_t pos = p_;
        if (!eat('^')) return base;
        skip();
        const std::size_t exp_pos = p_;
        const bool negative = eat('-');
        long n = small_nat();
        if (negative) {
            if (!b1_) throw ParseError("negative exponent (only B1 allows D^-1)", exp_pos);
            if (base->kind != Expr::Kind::d && base->kind != Expr::Kind::i)
                throw ParseError("negative exponent on a non-invertible factor", exp_pos);
            n = -n;
        }
        auto e = node(Expr::Kind::pow, pos);
        e->a = n;
        e->args.push_back(std::move(base));
        return e;
    }

    std::unique_ptr<Expr> atom() {
        skip();
        const std::size_t pos = p_;
        if (p_ >= s_.size()) throw ParseError("unexpected end of input", pos);
        if (eat_utf8("∂")) return node(Expr::Kind::d, pos);
        if (eat_utf8("∫")) return node(Expr::Kind::i, pos);
        const char c = s_[p_];
        switch (c) {
        case 'D': ++p_; return node(Expr::Kind::d, pos);
        case 'I': ++p_; return node(Expr::Kind::i, pos);
        case 'H': ++p_; return node(Expr::Kind::h, pos);
        case 'x': ++p_; return node(Expr::Kind::x, pos);
        case 'e': {
            ++p_;
            expect('(');
            auto e = node(Expr::Kind::e, pos);
            e->a = small_nat();
            expect(',');
            e->b = small_nat();
            expect(')');
            return e;
        }
        case '(': {
            ++p_;
            auto e = expr();
            expect(')');
            return e;
        }
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = node(Expr::Kind::num, pos);
            mpz_class num = nat();
            mpz_class den = 1;
            skip();
            if (p_ < s_.size() && s_[p_] == '/') {
                ++p_;
                const std::size_t dpos = p_;
                den = nat();
                if (den == 0) throw ParseError("zero denominator", dpos);
            }
            e->value = Rational(num, den);
            e->value.canonicalize();
            return e;
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos);
    }

    std::string_view s_;
    bool b1_;
    std::size_t p_ = 0;
};

template <class T, class Atoms>
T evaluate(const Expr& e, const Atoms& atoms) {
    switch (e.kind) {
    case Expr::Kind::add: return evaluate<T>(*e.args[0], atoms) + evaluate<T>(*e.args[1], atoms);
    case Expr::Kind::sub: return evaluate<T>(*e.args[0], atoms) - evaluate<T>(*e.args[1], atoms);
    case Expr::Kind::neg: return -evaluate<T>(*e.args[0], atoms);
    case Expr::Kind::mul: return evaluate<T>(*e.args[0], atoms) * evaluate<T>(*e.args[1], atoms);
    case Expr::Kind::pow: return atoms.pow(evaluate<T>(*e.args[0], atoms), e.a);
    default: return atoms.atom(e);
    }
}

struct I1Atoms {
    I1Element atom(const Expr& e) const {
        switch (e.kind) {
        case Expr::Kind::d: return I1Element::D();
        case Expr::Kind::i: return I1Element::I();
        case Expr::Kind::h: return I1Element::H();
        case Expr::Kind::x: return I1Element::I() * I1Element::H();  // x = I H
        case Expr::Kind::e: return I1Element::e(e.a, e.b);
        case Expr::Kind::num: return I1Element(e.value);
        default: throw std::logic_error("not an atom");
        }
    }
    I1Element pow(const I1Element& base, long n) const { return power(base, static_cast<unsigned>(n)); }
};

struct B1Atoms {
    B1Element atom(const Expr& e) const {
        switch (e.kind) {
        case Expr::Kind::d: return B1Element::D(1);
        case Expr::Kind::i: return B1Element::D(-1);
        case Expr::Kind::h: return B1Element::H();
        case Expr::Kind::x: return B1Element::D(-1) * B1Element::H();
        case Expr::Kind::e: return B1Element();  // F maps to zero
        case Expr::Kind::num: return B1Element(e.value);
        default: throw std::logic_error("not an atom");
        }
    }
    B1Element pow(const B1Element& base, long n) const { return b1_power(base, n); }
};

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view text, bool b1_mode) { return Parser(text, b1_mode).parse(); }

I1Element normalize(const Expr& e) { return evaluate<I1Element>(e, I1Atoms{}); }
B1Element normalize_b1(const Expr& e) { return evaluate<B1Element>(e, B1Atoms{}); }

I1Element parse_i1(std::string_view text) { return normalize(*parse_expression(text, false)); }
B1Element parse_b1(std::string_view text) { return normalize_b1(*parse_expression(text, true)); }

}  // namespace orelab::i1
