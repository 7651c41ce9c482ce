#include "wshift/symmatrix.hpp"

#include "wshift/errors.hpp"

#include <stdexcept>

namespace wshift {

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    const std::size_t n = rows.size();
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (j < i && rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
            m.entries_[i * n + j] = rows[i][j];
        }
    }
    return m;
}

SymMatrix SymMatrix::generate(std::size_t order, const std::function<Rational(std::size_t, std::size_t)>& entry)
{
    SymMatrix m(order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i; j < order; ++j) {
            Rational v = entry(i, j);
            m.entries_[i * order + j] = v;
            m.entries_[j * order + i] = v;
        }
    return m;
}

std::vector<std::vector<Rational>> SymMatrix::rows() const
{
    std::vector<std::vector<Rational>> out(order_, std::vector<Rational>(order_));
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

UniPoly char_poly(const SymMatrix& m)
{
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
    const std::size_t n = m.order();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    std::vector<Rational> mk(n * n);  // M_0 = 0
    std::vector<Rational> amk(n * n);
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A * M_{k-1} + c_{n-k+1} I, reusing amk from the previous step
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mk[i * n + j] = (k == 1 ? Rational(0) : amk[i * n + j]);
        for (std::size_t i = 0; i < n; ++i) mk[i * n + i] += c[n - k + 1];
        Rational trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational s = 0;
                for (std::size_t l = 0; l < n; ++l) s += m(i, l) * mk[l * n + j];
                amk[i * n + j] = s;
            }
        for (std::size_t i = 0; i < n; ++i) trace += amk[i * n + i];
        c[n - k] = -trace / static_cast<long>(k);
    }
    return UniPoly(std::move(c), "lambda");
}

bool is_psd(const SymMatrix& m)
{
    const std::size_t n = m.order();
    UniPoly p = char_poly(m);
    for (std::size_t i = 0; i <= n; ++i) {
        int s = sgn(p.coeff(i));
        if ((n - i) % 2 == 1) s = -s;
        if (s < 0) return false;
    }
    return true;
}

Threshold psd_corner_threshold(const SymMatrix& h, std::span<const Rational> g)
{
    const std::size_t n = h.order();
    if (g.size() != n) throw std::invalid_argument("border length must equal the order of h");
    if (!is_psd(h)) throw NotPsdError("psd_corner_threshold: inner block is not positive semidefinite");
    bool all_zero = true;
    for (const auto& v : g) all_zero = all_zero && v == 0;
    if (all_zero) return Threshold::infinite();

    // Solve h y = g by reduction to row echelon form with an explicit
    // consistency check; for PSD h and g in range(h), g^T y = g^T h^+ g.
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = h(i, j);
        aug[i][n] = g[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && aug[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(aug[p], aug[row]);
        Rational inv = 1 / aug[row][col];
        for (std::size_t j = col; j <= n; ++j) aug[row][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            for (std::size_t j = col; j <= n; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (aug[i][n] != 0) return Threshold::none();

    std::vector<Rational> y(n);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) y[pivot_col[r]] = aug[r][n];
    Rational quad = 0;
    for (std::size_t i = 0; i < n; ++i) quad += g[i] * y[i];
    return Threshold::finite(RealRoot(Rational(1 / quad)));
}

Rational determinant(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            std::swap(a[p], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

} // namespace wshift
