#include "orelab/i1/b1.hpp"

#include <stdexcept>
#include <vector>

#include "orelab/errors.hpp"

namespace orelab::i1 {

void B1Element::set(int k, Poly p) {
    if (p.is_zero())
        t_.erase(k);
    else
        t_[k] = std::move(p);
}

B1Element B1Element::term(int k, const Poly& b) {
    B1Element e;
    e.set(k, b);
    return e;
}

int B1Element::h_degree() const {
    int d = -1;
    for (const auto& kv : t_) d = std::max(d, kv.second.degree());
    return d;
}

B1Element B1Element::operator-() const {
    B1Element r;
    for (const auto& [k, p] : t_) r.set(k, -p);
    return r;
}

B1Element& B1Element::operator+=(const B1Element& o) {
    for (const auto& [k, p] : o.t_) {
        auto it = t_.find(k);
        set(k, it == t_.end() ? p : it->second + p);
    }
    return *this;
}

B1Element operator*(const B1Element& a, const B1Element& b) {
    // (beta D^k)(gamma D^l) = beta gamma(H+k) D^{k+l}
    B1Element r;
    for (const auto& [k, beta] : a.t_)
        for (const auto& [l, gamma] : b.t_) r += B1Element::term(k + l, beta * gamma.shifted(k));
    return r;
}

B1Element b1_mul(const B1Element& a, const B1Element& b) { return a * b; }

B1Element b1_power(const B1Element& a, long n) {
    if (n >= 0) {
        B1Element r(1);
        for (long k = 0; k < n; ++k) r = r * a;
        return r;
    }
    if (a.terms().size() != 1 || !a.terms().begin()->second.is_constant())
        throw ArgumentError("negative powers are defined only for c*D^k");
    const auto& [k, c] = *a.terms().begin();
    B1Element inv = B1Element::term(-k, Poly(1 / c.lead()));
    return b1_power(inv, -n);
}

B1Element to_B1(const I1Element& a) {
    B1Element r;
    for (const auto& [i, p] : a.neg()) r += B1Element::term(i, p);
    r += B1Element::term(0, a.mid());
    // I^i a(H) = D^-i a(H) = a(H - i) D^-i
    for (const auto& [i, p] : a.pos()) r += B1Element::term(-i, p.shifted(-i));
    return r;
}

std::string to_string(const B1Element& b) {
    if (b.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = b.terms().rbegin(); it != b.terms().rend(); ++it) {
        const auto& [k, p] = *it;
        std::string dpart = k == 0 ? "" : (k == 1 ? "D" : "D^" + std::to_string(k));
        bool negative = false;
        std::string body;
        if (p.term_count() == 1) {
            const Rational c = p.lead();
            negative = c < 0;
            std::string hpart = p.degree() == 0 ? "" : (p.degree() == 1 ? "H" : "H^" + std::to_string(p.degree()));
            std::vector<std::string> parts;
            if (abs(c) != 1 || (hpart.empty() && dpart.empty())) parts.push_back(to_string(Rational(abs(c))));
            if (!hpart.empty()) parts.push_back(hpart);
            if (!dpart.empty()) parts.push_back(dpart);
            for (std::size_t n = 0; n < parts.size(); ++n) body += (n ? "*" : "") + parts[n];
        } else {
            body = dpart.empty() ? p.to_string("H") : "(" + p.to_string("H") + ")*" + dpart;
        }
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        s += body;
        first = false;
    }
    return s;
}

namespace {

// Unknown layout: u coefficients then v coefficients, each indexed by
// (exponent ascending, H-degree ascending).
struct Ansatz {
    int lo, width, hdeg;
    std::size_t size() const { return static_cast<std::size_t>(width + 1) * static_cast<std::size_t>(hdeg + 1); }
    std::size_t index(int k, int m) const {
        return static_cast<std::size_t>(k - lo) * static_cast<std::size_t>(hdeg + 1) + static_cast<std::size_t>(m);
    }
};

B1Element assemble(const Ansatz& z, const std::vector<Rational>& x, std::size_t offset) {
    B1Element r;
    for (int k = z.lo; k <= z.lo + z.width; ++k) {
        std::vector<Rational> c;
        for (int m = 0; m <= z.hdeg; ++m) c.push_back(x[offset + z.index(k, m)]);
        r += B1Element::term(k, Poly(std::move(c)));
    }
    return r;
}

}  // namespace

OreMultipliers ore_multipliers(const B1Element& a, const B1Element& b, const OreOptions& options) {
    if (a.is_zero() || b.is_zero()) throw ArgumentError("ore_multipliers needs nonzero inputs");
    if (a == b) return {B1Element(1), B1Element(1), 0, 0};
    const int da = a.max_exponent() - a.min_exponent(), db = b.max_exponent() - b.min_exponent();
    const int ha = a.h_degree(), hb = b.h_degree();
    for (int total = 0; total <= options.max_total; ++total)
        for (int w = 0; w <= total; ++w) {
            const int h = total - w;
            // Both products then span D-exponents 0..W+da+db and H-degree h+ha+hb.
            const Ansatz zu{-a.min_exponent(), w + db, h + hb};
            const Ansatz zv{-b.min_exponent(), w + da, h + ha};
            const int out_width = w + da + db, out_h = h + ha + hb;
            const std::size_t n = zu.size() + zv.size();
            auto row = [&](int k, int m) {
                return static_cast<std::size_t>(k) * static_cast<std::size_t>(out_h + 1) + static_cast<std::size_t>(m);
            };
            Matrix sys = zero_matrix(static_cast<std::size_t>(out_width + 1) * static_cast<std::size_t>(out_h + 1), n);
            // Column for unknown c_{k,m}: coefficients of (H^m D^k) * a.
            auto fill = [&](const Ansatz& z, std::size_t offset, const B1Element& f, const Rational& sign) {
                for (int k = z.lo; k <= z.lo + z.width; ++k)
                    for (int m = 0; m <= z.hdeg; ++m) {
                        B1Element prod = B1Element::term(k, Poly::monomial(1, m)) * f;
                        for (const auto& [e, p] : prod.terms())
                            for (int d = 0; d <= p.degree(); ++d)
                                if (p.coeff(d) != 0) sys[row(e, d)][offset + z.index(k, m)] = sign * p.coeff(d);
                    }
            };
            fill(zu, 0, a, 1);
            fill(zv, zu.size(), b, -1);
            auto x = canonical_null_vector(sys, n);
            if (x.empty()) continue;
            OreMultipliers out{assemble(zu, x, 0), assemble(zv, x, zu.size()), w, h};
            if (out.u.is_zero() || out.v.is_zero() || out.u * a != out.v * b)
                throw std::logic_error("ore solver produced an invalid pair");
            return out;
        }
    throw std::runtime_error("ore_multipliers: window cap exceeded");
}

}  // namespace orelab::i1
