#pragma once

#include <map>
#include <string>
#include <utility>

#include "orelab/i1/element.hpp"

namespace orelab::i1 {

/// Element of the skew Laurent polynomial ring K[H][D, D^-1; tau],
/// tau(H) = H + 1, written sum_k b_k(H) D^k with coefficients on the left.
class B1Element {
public:
    B1Element() = default;
    B1Element(const Rational& c) { set(0, Poly(c)); }  // NOLINT
    B1Element(long c) : B1Element(Rational(c)) {}      // NOLINT

    /// b(H) D^k
    static B1Element term(int k, const Poly& b);
    static B1Element D(int k = 1) { return term(k, Poly(1)); }
    static B1Element H() { return term(0, Poly::var()); }

    const std::map<int, Poly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int min_exponent() const { return t_.begin()->first; }
    int max_exponent() const { return t_.rbegin()->first; }
    int h_degree() const;

    B1Element operator-() const;
    B1Element& operator+=(const B1Element& o);
    friend B1Element operator+(B1Element a, const B1Element& b) { return a += b; }
    friend B1Element operator-(B1Element a, const B1Element& b) { return a += -b; }
    friend B1Element operator*(const B1Element& a, const B1Element& b);
    friend bool operator==(const B1Element&, const B1Element&) = default;

private:
    void set(int k, Poly p);
    std::map<int, Poly> t_;
};

B1Element b1_mul(const B1Element& a, const B1Element& b);
B1Element b1_power(const B1Element& a, long n);  // n < 0 only for monomials c*D^k

/// The quotient map I_1 -> I_1/F = B_1: D -> D, I -> D^-1, H -> H.
B1Element to_B1(const I1Element& a);

/// Descending D-exponents, e.g. "(H + 1)*D - 2*D^-1".
std::string to_string(const B1Element& b);

struct OreMultipliers {
    B1Element u, v;
    int window = 0;     // W: extra D-width of the ansatz
    int h_window = 0;   // h: extra H-degree of the ansatz
};

struct OreOptions {
    int max_total = 24;  // cap on W + h
};

/// Nonzero u, v with u*a = v*b, from the first window (ordered by W + h,
/// then W) whose linear system has a nontrivial solution. Throws
/// ArgumentError for zero input and std::runtime_error past the cap.
OreMultipliers ore_multipliers(const B1Element& a, const B1Element& b, const OreOptions& options = {});

}  // namespace orelab::i1
