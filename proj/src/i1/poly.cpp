#include "orelab/i1/poly.hpp"

#include <algorithm>
#include <cstdlib>

namespace orelab::i1 {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    trim();
}

Poly Poly::monomial(const Rational& c, int degree) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Rational(0);
}

std::size_t Poly::term_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rational& c) { return c != 0; }));
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::shifted(const Rational& s) const {
    // Horner in the ring Q[X]: p(X+s) = (...(c_n (X+s) + c_{n-1})(X+s) + ...)
    Poly acc;
    const Poly xs(std::vector<Rational>{s, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xs + Poly(*it);
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return Poly(std::move(d));
}

std::vector<long> Poly::nonneg_integer_roots() const {
    std::vector<long> roots;
    if (is_zero() || is_constant()) return roots;
    // Clear denominators; an integer root divides the lowest nonzero coefficient.
    mpz_class l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::size_t low = 0;
    while (c_[low] == 0) ++low;
    if (low > 0) roots.push_back(0);
    mpz_class c0 = abs(Rational(c_[low] * l).get_num());
    // Cauchy bound keeps the scan finite when |c0| is huge.
    Rational bound = 0;
    for (const auto& c : c_) bound = std::max(bound, Rational(abs(c / lead())));
    mpz_class limit = mpz_class(bound.get_num() / bound.get_den()) + 2;
    if (c0 < limit) limit = c0;
    for (mpz_class k = 1; k <= limit; ++k) {
        if (c0 % k != 0) continue;
        if ((*this)(Rational(k)) == 0) roots.push_back(k.get_si());
    }
    return roots;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        bool negative = c < 0;
        Rational a = abs(c);
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mono.empty())
            s += i1::to_string(a);
        else if (a == 1)
            s += mono;
        else
            s += i1::to_string(a) + "*" + mono;
    }
    return s;
}

}  // namespace orelab::i1
