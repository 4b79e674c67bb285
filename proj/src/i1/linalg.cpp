#include "orelab/i1/linalg.hpp"

namespace orelab::i1 {

Matrix zero_matrix(std::size_t rows, std::size_t cols) {
    return Matrix(rows, std::vector<Rational>(cols, Rational(0)));
}

RowEchelon row_reduce(Matrix m, std::size_t cols) {
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                if (m[row][c] != 0) m[r][c] -= f * m[row][c];
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rref = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return row_reduce(m, cols).pivots.size(); }

std::size_t nullity(const Matrix& m, std::size_t cols) { return cols - rank(m, cols); }

std::vector<std::vector<Rational>> nullspace(const Matrix& m, std::size_t cols) {
    RowEchelon e = row_reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> canonical_null_vector(const Matrix& m, std::size_t cols) {
    auto basis = nullspace(m, cols);
    if (basis.empty()) return {};
    auto v = std::move(basis.front());
    mpz_class l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    for (auto& x : v) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    Rational sign = 1;
    for (const auto& x : v)
        if (x != 0) {
            sign = x < 0 ? -1 : 1;
            break;
        }
    for (auto& x : v) x = x * sign / Rational(g);
    return v;
}

}  // namespace orelab::i1
