#include "orelab/i1/element.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace orelab::i1 {

namespace {

Rational factorial_ratio(long j, long i) {  // j! / i!
    Rational r = 1;
    for (long k = i + 1; k <= j; ++k) r *= k;
    for (long k = j + 1; k <= i; ++k) r /= k;
    return r;
}

}  // namespace

// Each graded component of degree d is the sequence of matrix entries
// M[c+d][c] over its columns c >= max(0,-d), stored as a polynomial in c
// plus finitely many corrections (the F part).
class ColumnModel {
public:
    struct Component {
        Poly poly;
        std::map<long, Rational> corr;

        Rational value(long col, int d) const {
            if (col < std::max(0, -d)) return 0;
            Rational v = poly(Rational(col));
            auto it = corr.find(col);
            if (it != corr.end()) v += it->second;
            return v;
        }
    };

    explicit ColumnModel(const I1Element& a) {
        for (const auto& [i, p] : a.neg_) comps_[-i].poly += p.shifted(1 - i);
        comps_[0].poly += a.mid_.shifted(1);
        for (const auto& [i, p] : a.pos_) comps_[i].poly += p.shifted(1);
        for (const auto& [ij, l] : a.lam_) comps_[static_cast<int>(ij.first - ij.second)].corr[ij.second] += l;
        std::erase_if(comps_, [](const auto& kv) { return kv.second.poly.is_zero() && kv.second.corr.empty(); });
    }
    ColumnModel() = default;

    ColumnModel operator*(const ColumnModel& b) const {
        ColumnModel out;
        for (const auto& [p, ca] : comps_)
            for (const auto& [q, cb] : b.comps_) {
                const int d = p + q;
                Component& r = out.comps_[d];
                const Poly prod = ca.poly.shifted(q) * cb.poly;
                r.poly += prod;
                const long lo = std::max(0, -d);
                std::set<long> cols;
                const long invalid_end = std::max<long>(std::max(0, -q), std::max(0, -p) - q);
                for (long c = lo; c < invalid_end; ++c) cols.insert(c);
                for (const auto& kv : cb.corr) cols.insert(kv.first);
                for (const auto& kv : ca.corr) cols.insert(kv.first - q);
                for (long c : cols) {
                    if (c < lo) continue;
                    Rational actual = ca.value(c + q, p) * cb.value(c, q);
                    Rational diff = actual - prod(Rational(c));
                    if (diff != 0) r.corr[c] += diff;
                }
            }
        return out;
    }

    I1Element to_element() const {
        I1Element a;
        for (const auto& [d, comp] : comps_) {
            if (d < 0)
                a.set_neg(-d, comp.poly.shifted(-d - 1));
            else if (d == 0)
                a.mid_ = comp.poly.shifted(-1);
            else
                a.set_pos(d, comp.poly.shifted(-1));
            for (const auto& [c, l] : comp.corr)
                if (l != 0) a.lam_[{c + d, c}] += l;
        }
        std::erase_if(a.lam_, [](const auto& kv) { return kv.second == 0; });
        return a;
    }

private:
    std::map<int, Component> comps_;
};

void I1Element::set_neg(int i, Poly p) {
    if (p.is_zero())
        neg_.erase(i);
    else
        neg_[i] = std::move(p);
}

void I1Element::set_pos(int i, Poly p) {
    if (p.is_zero())
        pos_.erase(i);
    else
        pos_[i] = std::move(p);
}

I1Element I1Element::term(int d_power, const Poly& a) {
    I1Element e;
    if (d_power > 0)
        e.set_neg(d_power, a);
    else if (d_power == 0)
        e.mid_ = a;
    else
        e.set_pos(-d_power, a);
    return e;
}

I1Element I1Element::D(int power) { return term(power, Poly(1)); }
I1Element I1Element::I(int power) { return term(-power, Poly(1)); }
I1Element I1Element::H() { return term(0, Poly::var()); }
I1Element I1Element::poly_H(const Poly& a) { return term(0, a); }

I1Element I1Element::e(long i, long j, const Rational& c) {
    I1Element x;
    if (c != 0) x.lam_[{i, j}] = c;
    return x;
}

I1Element I1Element::operator-() const {
    I1Element r;
    return r -= *this;
}

I1Element& I1Element::operator+=(const I1Element& o) {
    for (const auto& [i, p] : o.neg_) set_neg(i, neg_[i] + p);
    mid_ += o.mid_;
    for (const auto& [i, p] : o.pos_) set_pos(i, pos_[i] + p);
    for (const auto& [ij, l] : o.lam_) {
        Rational v = lam_[ij] + l;
        if (v == 0)
            lam_.erase(ij);
        else
            lam_[ij] = v;
    }
    return *this;
}

I1Element& I1Element::operator-=(const I1Element& o) {
    for (const auto& [i, p] : o.neg_) set_neg(i, neg_[i] - p);
    mid_ -= o.mid_;
    for (const auto& [i, p] : o.pos_) set_pos(i, pos_[i] - p);
    for (const auto& [ij, l] : o.lam_) {
        Rational v = lam_[ij] - l;
        if (v == 0)
            lam_.erase(ij);
        else
            lam_[ij] = v;
    }
    return *this;
}

I1Element operator*(const I1Element& a, const I1Element& b) {
    if (a.is_zero() || b.is_zero()) return I1Element();
    return (ColumnModel(a) * ColumnModel(b)).to_element();
}

I1Element mul(const I1Element& a, const I1Element& b) { return a * b; }

I1Element power(const I1Element& a, unsigned n) {
    I1Element r(1);
    for (unsigned k = 0; k < n; ++k) r = r * a;
    return r;
}

Rational I1Element::entry(long row, long col) const {
    if (row < 0 || col < 0) return 0;
    Rational v = 0;
    const long d = row - col;
    if (d < 0) {
        auto it = neg_.find(static_cast<int>(-d));
        if (it != neg_.end()) v += it->second(Rational(row + 1));
    } else if (d == 0) {
        v += mid_(Rational(row + 1));
    } else {
        auto it = pos_.find(static_cast<int>(d));
        if (it != pos_.end()) v += it->second(Rational(col + 1));
    }
    auto it = lam_.find({row, col});
    if (it != lam_.end()) v += it->second;
    return v;
}

Matrix I1Element::window(std::size_t rows, std::size_t cols) const {
    Matrix m = zero_matrix(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = entry(static_cast<long>(r), static_cast<long>(c));
    return m;
}

long I1Element::max_lambda_col() const {
    long m = -1;
    for (const auto& kv : lam_) m = std::max(m, kv.first.second);
    return m;
}

long I1Element::max_lambda_row() const {
    long m = -1;
    for (const auto& kv : lam_) m = std::max(m, kv.first.first);
    return m;
}

I1Element star(const I1Element& a) {
    I1Element r;
    for (const auto& [i, p] : a.neg()) r += I1Element::term(-i, p);
    r += I1Element::poly_H(a.mid());
    for (const auto& [i, p] : a.pos()) r += I1Element::term(i, p);
    for (const auto& [ij, l] : a.lam()) r += I1Element::e(ij.second, ij.first, l);
    return r;
}

I1Element graded_component(const I1Element& a, int degree) {
    I1Element r;
    if (degree < 0) {
        auto it = a.neg().find(-degree);
        if (it != a.neg().end()) r += I1Element::term(-degree, it->second);
    } else if (degree == 0) {
        r += I1Element::poly_H(a.mid());
    } else {
        auto it = a.pos().find(degree);
        if (it != a.pos().end()) r += I1Element::term(-degree, it->second);
    }
    for (const auto& [ij, l] : a.lam())
        if (ij.first - ij.second == degree) r += I1Element::e(ij.first, ij.second, l);
    return r;
}

std::vector<int> degrees(const I1Element& a) {
    std::set<int> ds;
    for (const auto& kv : a.neg()) ds.insert(-kv.first);
    if (!a.mid().is_zero()) ds.insert(0);
    for (const auto& kv : a.pos()) ds.insert(kv.first);
    for (const auto& kv : a.lam()) ds.insert(static_cast<int>(kv.first.first - kv.first.second));
    return {ds.begin(), ds.end()};
}

bool in_F(const I1Element& a) { return a.neg().empty() && a.mid().is_zero() && a.pos().empty(); }

bool in_KH_plus_F(const I1Element& a) { return a.neg().empty() && a.pos().empty(); }

namespace {

// alpha(H) x^n = alpha(n+1) x^n
Poly apply_H_poly(const Poly& alpha, const Poly& p) {
    std::vector<Rational> c = p.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) c[n] *= alpha(Rational(static_cast<long>(n) + 1));
    return Poly(std::move(c));
}

Poly integrate(const Poly& p) {
    std::vector<Rational> c(p.coeffs().size() + 1, Rational(0));
    for (std::size_t n = 0; n < p.coeffs().size(); ++n) c[n + 1] = p.coeffs()[n] / Rational(static_cast<long>(n) + 1);
    return Poly(std::move(c));
}

}  // namespace

Poly act(const I1Element& a, const Poly& p) {
    Poly out;
    for (const auto& [i, alpha] : a.neg()) {
        Poly q = p;
        for (int k = 0; k < i; ++k) q = q.derivative();
        out += apply_H_poly(alpha, q);
    }
    out += apply_H_poly(a.mid(), p);
    for (const auto& [i, alpha] : a.pos()) {
        Poly q = apply_H_poly(alpha, p);
        for (int k = 0; k < i; ++k) q = integrate(q);
        out += q;
    }
    for (const auto& [ij, l] : a.lam()) {
        auto [i, j] = ij;
        Rational c = p.coeff(static_cast<int>(j));
        if (c != 0) out += Poly::monomial(c * l * factorial_ratio(j, i), static_cast<int>(i));
    }
    return out;
}

namespace {

struct Term {
    bool negative;
    std::string body;
};

std::string power_str(const char* sym, int k) { return k == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(k); }

// a(H) placed next to D^i (right) or I^i (left).
void poly_terms(std::vector<Term>& out, const Poly& a, const std::string& left, const std::string& right) {
    if (a.term_count() == 1) {
        const int k = a.degree();
        const Rational c = a.lead();
        std::vector<std::string> parts;
        if (abs(c) != 1) parts.push_back(to_string(Rational(abs(c))));
        if (!left.empty()) parts.push_back(left);
        if (k > 0) parts.push_back(power_str("H", k));
        if (!right.empty()) parts.push_back(right);
        if (parts.empty()) parts.push_back("1");
        std::string body;
        for (std::size_t n = 0; n < parts.size(); ++n) body += (n ? "*" : "") + parts[n];
        out.push_back({c < 0, body});
        return;
    }
    std::string p = "(" + a.to_string("H") + ")";
    out.push_back({false, left.empty() ? p + "*" + right : left + "*" + p});
}

}  // namespace

std::string to_string(const I1Element& a) {
    std::vector<Term> terms;
    for (auto it = a.neg().rbegin(); it != a.neg().rend(); ++it) poly_terms(terms, it->second, "", power_str("D", it->first));
    for (int k = a.mid().degree(); k >= 0; --k)
        if (a.mid().coeff(k) != 0) poly_terms(terms, Poly::monomial(a.mid().coeff(k), k), "", "");
    for (const auto& [i, p] : a.pos()) poly_terms(terms, p, power_str("I", i), "");
    for (const auto& [ij, l] : a.lam()) {
        std::string e = "e(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")";
        terms.push_back({l < 0, abs(l) == 1 ? e : to_string(Rational(abs(l))) + "*" + e});
    }
    if (terms.empty()) return "0";
    std::string s;
    for (std::size_t n = 0; n < terms.size(); ++n) {
        if (n == 0)
            s += terms[n].negative ? "-" : "";
        else
            s += terms[n].negative ? " - " : " + ";
        s += terms[n].body;
    }
    return s;
}

}  // namespace orelab::i1
