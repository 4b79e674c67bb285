#include "orelab/i1/fredholm.hpp"

#include <algorithm>

#include "orelab/errors.hpp"

namespace orelab::i1 {

namespace {

// Column polynomial of degree d: the entry M[c+d][c] for large c.
Poly column_poly(const I1Element& a, int d) {
    if (d < 0) {
        auto it = a.neg().find(-d);
        return it == a.neg().end() ? Poly() : it->second.shifted(1 + d);
    }
    if (d == 0) return a.mid().shifted(1);
    auto it = a.pos().find(d);
    return it == a.pos().end() ? Poly() : it->second.shifted(1);
}

long max_root(const Poly& p) {
    auto r = p.nonneg_integer_roots();
    return r.empty() ? -1 : r.back();
}

int max_degree(const I1Element& a) {
    auto ds = degrees(a);
    return ds.empty() ? 0 : ds.back();
}

long rows_for(const I1Element& a, long cols) {
    return std::max<long>(cols + std::max(0, max_degree(a)), a.max_lambda_row()) + 1;
}

Matrix block(const I1Element& a, long row0, long rows, long cols) {
    Matrix m = zero_matrix(static_cast<std::size_t>(std::max(0L, rows)), static_cast<std::size_t>(cols));
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = a.entry(row0 + r, c);
    return m;
}

}  // namespace

std::string to_string(const FredholmData& f) {
    auto s = [](const std::optional<long>& v, const char* none) { return v ? std::to_string(*v) : std::string(none); };
    return "ker=" + s(f.kernel_dim, "inf") + " coker=" + s(f.cokernel_dim, "inf") +
           " index=" + s(f.index, "undefined");
}

std::optional<int> top_degree(const I1Element& a) {
    if (!a.pos().empty()) return a.pos().rbegin()->first;
    if (!a.mid().is_zero()) return 0;
    if (!a.neg().empty()) return -a.neg().begin()->first;
    return std::nullopt;
}

long kernel_bound(const I1Element& a) {
    auto d = top_degree(a);
    if (!d) throw PreconditionError("kernel_bound: element lies in F");
    return std::max({static_cast<long>(-*d), a.max_lambda_col(), max_root(column_poly(a, *d)), 0L});
}

long kernel_dim_at(const I1Element& a, long cols) {
    const long n = cols + 1;
    return static_cast<long>(nullity(block(a, 0, rows_for(a, cols), n), static_cast<std::size_t>(n)));
}

long cokernel_dim_transpose(const I1Element& a) {
    auto dt = top_degree(a);
    if (!dt) throw PreconditionError("cokernel: element lies in F");
    const long d = *dt;
    // For columns c >= c0 the equation sum_r y_r M[r][c] = 0 solves for
    // y_{c+d}; so y is fixed by y_0..y_u and the equations of columns <= u-d.
    const long c0 = std::max({a.max_lambda_col() + 1, max_root(column_poly(a, *dt)) + 1, -d, 0L});
    const long u = std::max({c0 - 1 + d, a.max_lambda_row(), 0L});
    const long eqs = std::max(0L, u - d + 1);
    Matrix m = zero_matrix(static_cast<std::size_t>(eqs), static_cast<std::size_t>(u + 1));
    for (long c = 0; c < eqs; ++c)
        for (long r = 0; r <= u; ++r) m[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = a.entry(r, c);
    return static_cast<long>(nullity(m, static_cast<std::size_t>(u + 1)));
}

long cokernel_dim_by_image(const I1Element& a, long t) {
    auto dt = top_degree(a);
    if (!dt) throw PreconditionError("cokernel: element lies in F");
    const long d = *dt;
    // Inputs with top index beyond this bound have outputs with top index n + d.
    const long cols = std::max({kernel_bound(a), t - d, a.max_lambda_row() - d, 0L}) + 1;
    const long rows = rows_for(a, cols - 1);
    const Matrix all = block(a, 0, rows, cols);
    const Matrix high = block(a, t + 1, rows - (t + 1), cols);
    const long image_in_window = static_cast<long>(rank(all, static_cast<std::size_t>(cols))) -
                                 static_cast<long>(rank(high, static_cast<std::size_t>(cols)));
    return (t + 1) - image_in_window;
}

FredholmData fredholm(const I1Element& a) {
    FredholmData f;
    if (in_F(a)) return f;
    f.window = kernel_bound(a);
    f.kernel_dim = kernel_dim_at(a, f.window);
    f.cokernel_dim = cokernel_dim_transpose(a);
    f.index = *f.kernel_dim - *f.cokernel_dim;
    return f;
}

std::optional<LargestSet> parse_largest_set(std::string_view s) {
    if (s == "S0") return LargestSet::s0;
    if (s == "Sl0") return LargestSet::sl0;
    if (s == "Sr0") return LargestSet::sr0;
    return std::nullopt;
}

bool s_membership(const I1Element& a, LargestSet which) {
    switch (which) {
    case LargestSet::sr0: return fredholm(a).bijective();
    case LargestSet::sl0: return fredholm(star(a)).bijective();
    case LargestSet::s0: return in_KH_plus_F(a) && fredholm(a).bijective();
    }
    return false;
}

bool window_invertible(const I1Element& a) {
    if (!in_KH_plus_F(a)) throw PreconditionError("window_invertible expects an element of K[H]+F");
    const Poly& alpha = a.mid();
    if (alpha.is_zero()) return false;
    // Diagonal entries alpha(k+1) vanish only below the Cauchy bound.
    Rational bound = 0;
    for (const auto& c : alpha.coeffs()) bound = std::max(bound, Rational(abs(c / alpha.lead())));
    const long cauchy = static_cast<long>(mpz_class(bound.get_num() / bound.get_den()).get_si()) + 2;
    const long n = std::max({cauchy, a.max_lambda_row() + 1, a.max_lambda_col() + 1});
    return rank(a.window(static_cast<std::size_t>(n), static_cast<std::size_t>(n)), static_cast<std::size_t>(n)) ==
           static_cast<std::size_t>(n);
}

MFactor m_factor(const I1Element& u) {
    if (!s_membership(u, LargestSet::s0)) throw PreconditionError("m_factor: element is not in S_0(I_1)");
    const Poly& alpha = u.mid();
    // Patch the zeros of the diagonal with e(i,i) so v is bijective.
    I1Element v = I1Element::poly_H(alpha);
    for (long r : alpha.shifted(1).nonneg_integer_roots()) v += I1Element::e(r, r);
    I1Element w(1);
    for (const auto& [ij, l] : u.lam()) {
        const auto [i, j] = ij;
        Rational g = i == j && alpha(Rational(i + 1)) == 0 ? Rational(1) : Rational(0);
        Rational d_i = alpha(Rational(i + 1)) == 0 ? Rational(1) : alpha(Rational(i + 1));
        w += I1Element::e(i, j, (l - g) / d_i);
    }
    for (long r : alpha.shifted(1).nonneg_integer_roots())
        if (!u.lam().contains({r, r})) w += I1Element::e(r, r, -1);
    if (v * w != u) throw std::logic_error("m_factor: v w != u");
    return {v, w};
}

}  // namespace orelab::i1
