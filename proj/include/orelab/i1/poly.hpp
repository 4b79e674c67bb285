#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace orelab::i1 {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Canonical: no trailing zeros; the zero polynomial is empty.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: constants convert implicitly
    Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(const Rational& c, int degree);
    static Poly var() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    std::size_t term_count() const;

    Rational operator()(const Rational& x) const;
    /// p(X + s)
    Poly shifted(const Rational& s) const;
    /// Formal derivative.
    Poly derivative() const;
    /// Non-negative integer roots, ascending.
    std::vector<long> nonneg_integer_roots() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Descending powers, e.g. "H^2 - 3/2*H + 1".
    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace orelab::i1
