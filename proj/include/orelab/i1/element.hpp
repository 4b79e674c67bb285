#pragma once

#include <map>
#include <string>
#include <utility>

#include "orelab/i1/linalg.hpp"
#include "orelab/i1/poly.hpp"

namespace orelab::i1 {

/// An element of I_1 in canonical form
///   sum_{i>=1} a_{-i}(H) D^i + a_0(H) + sum_{i>=1} I^i a_i(H) + sum l_ij e(i,j)
/// with D the derivation, I the integration, H = D x and e(i,j) the matrix
/// units of the ideal F. Stored maps hold nonzero values only.
class I1Element {
public:
    I1Element() = default;
    I1Element(const Rational& c) : mid_(c) {}  // NOLINT
    I1Element(long c) : mid_(Rational(c)) {}   // NOLINT

    static I1Element D(int power = 1);
    static I1Element I(int power = 1);
    static I1Element H();
    static I1Element poly_H(const Poly& a);
    static I1Element e(long i, long j, const Rational& c = 1);
    /// a(H) D^i for i > 0, a(H) for i = 0, I^{-i} a(H) for i < 0.
    static I1Element term(int d_power, const Poly& a);

    const std::map<int, Poly>& neg() const { return neg_; }
    const Poly& mid() const { return mid_; }
    const std::map<int, Poly>& pos() const { return pos_; }
    const std::map<std::pair<long, long>, Rational>& lam() const { return lam_; }

    bool is_zero() const { return neg_.empty() && mid_.is_zero() && pos_.empty() && lam_.empty(); }

    I1Element operator-() const;
    I1Element& operator+=(const I1Element& o);
    I1Element& operator-=(const I1Element& o);
    friend I1Element operator+(I1Element a, const I1Element& b) { return a += b; }
    friend I1Element operator-(I1Element a, const I1Element& b) { return a -= b; }
    friend I1Element operator*(const I1Element& a, const I1Element& b);
    friend bool operator==(const I1Element&, const I1Element&) = default;

    /// Entry of the operator in the divided-power basis v_k = x^k / k!:
    /// a v_col = sum_row entry(row, col) v_row.
    Rational entry(long row, long col) const;
    Matrix window(std::size_t rows, std::size_t cols) const;

    /// Largest column / row index carrying an e(i,j); -1 if none.
    long max_lambda_col() const;
    long max_lambda_row() const;

private:
    void set_neg(int i, Poly p);
    void set_pos(int i, Poly p);
    std::map<int, Poly> neg_;
    Poly mid_;
    std::map<int, Poly> pos_;
    std::map<std::pair<long, long>, Rational> lam_;
    friend class ColumnModel;
};

I1Element mul(const I1Element& a, const I1Element& b);
I1Element power(const I1Element& a, unsigned n);
/// The involution D* = I, I* = D, H* = H, e(i,j)* = e(j,i).
I1Element star(const I1Element& a);

/// Degree of D^i is -i, of I^i is +i, of e(i,j) is i - j.
I1Element graded_component(const I1Element& a, int degree);
/// Degrees with a nonzero component, ascending.
std::vector<int> degrees(const I1Element& a);
bool in_F(const I1Element& a);
bool in_KH_plus_F(const I1Element& a);

/// Action on Q[x] computed in the monomial basis: D differentiates,
/// I x^n = x^{n+1}/(n+1), H x^n = (n+1) x^n, e(i,j) x^n = [n=j] j!/i! x^i.
Poly act(const I1Element& a, const Poly& p);

/// Canonical text form; re-parses to the same element. Order: D-terms by
/// descending power, then a_0, then I-terms ascending, then e(i,j) by (i,j).
std::string to_string(const I1Element& a);

}  // namespace orelab::i1
