#include "cfree/series.hpp"

namespace cfree {

namespace detail {
bool invertible_const(const CMatrix& m) {
    try {
        matrix_inverse(m);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}
}  // namespace detail

MatrixSeries promote(const ScalarSeries& s, int dim) {
    std::vector<CMatrix> c;
    c.reserve(s.order() + 1);
    for (int d = 0; d <= s.order(); ++d) c.push_back(CMatrix::scalar(dim, s[d]));
    return MatrixSeries(std::move(c));
}

MatrixSeries scale(const ScalarSeries& s, const MatrixSeries& m) {
    if (s.order() != m.order()) throw std::invalid_argument("series order mismatch");
    MatrixSeries r = MatrixSeries::zeros(m.order(), m[0]);
    for (int d = 0; d <= m.order(); ++d)
        for (int j = 0; j <= d; ++j) r[d] += s[j] * m[d - j];
    return r;
}

}  // namespace cfree
