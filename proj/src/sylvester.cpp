#include "paramdyn/sylvester.hpp"

#include "paramdyn/errors.hpp"

namespace paramdyn {

namespace {

// Bareiss determinant over Q[t]; consumes the matrix.
Poly bareiss_det(std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    Poly prev = Poly::constant(Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Poly();
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? Poly() : poly_div_exact(num, prev);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

Poly poly_resultant(const std::vector<Poly>& p, const std::vector<Poly>& q) {
    if (p.size() != q.size())
        throw DegreeMismatch("resultant requires forms of equal degree");
    if (p.size() < 2) throw DegreeMismatch("resultant requires degree >= 1 forms");
    const std::size_t d = p.size() - 1;
    const std::size_t n = 2 * d;

    // Row i (i < d): coefficients of z^(d-1-i) * p, in columns by descending
    // z-power of the degree 2d-1 product; same for q below.
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= d; ++j) m[i][i + j] = p[d - j];
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= d; ++j) m[d + i][i + j] = q[d - j];

    return bareiss_det(m);
}

}  // namespace paramdyn
