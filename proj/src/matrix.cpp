#include "cfree/matrix.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace cfree {

CMatrix CMatrix::identity(int k) {
    CMatrix m(k);
    for (int i = 0; i < k; ++i) m.at(i, i) = CScalar::one();
    return m;
}

CMatrix CMatrix::scalar(int k, const CScalar& z) {
    CMatrix m(k);
    for (int i = 0; i < k; ++i) m.at(i, i) = z;
    return m;
}

bool CMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool CMatrix::is_identity() const {
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            if (at(i, j) != (i == j ? CScalar::one() : CScalar::zero())) return false;
    return true;
}

bool CMatrix::is_diagonal() const {
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(k_);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) m.at(i, j) = at(j, i).conj();
    return m;
}

CMatrix CMatrix::operator-() const {
    CMatrix m(k_);
    for (size_t t = 0; t < e_.size(); ++t) m.e_[t] = -e_[t];
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (o.k_ != k_) throw std::invalid_argument("matrix dimension mismatch");
    for (size_t t = 0; t < e_.size(); ++t) e_[t] += o.e_[t];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (o.k_ != k_) throw std::invalid_argument("matrix dimension mismatch");
    for (size_t t = 0; t < e_.size(); ++t) e_[t] -= o.e_[t];
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("matrix dimension mismatch");
    int k = a.k_;
    CMatrix r(k);
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) {
            const CScalar& ail = a.at(i, l);
            if (ail.is_zero()) continue;
            for (int j = 0; j < k; ++j) r.at(i, j) += ail * b.at(l, j);
        }
    return r;
}

CMatrix operator*(const CScalar& s, CMatrix a) {
    return a *= s;
}

CMatrix& CMatrix::operator*=(const CScalar& s) {
    for (auto& x : e_) x *= s;
    return *this;
}

CMatrix matrix_inverse(const CMatrix& a) {
    int k = a.dim();
    CMatrix m = a;
    CMatrix inv = CMatrix::identity(k);
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("matrix_inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < k; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        CScalar pinv = m.at(col, col).inverse();
        for (int j = 0; j < k; ++j) {
            m.at(col, j) *= pinv;
            inv.at(col, j) *= pinv;
        }
        for (int r = 0; r < k; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            CScalar f = m.at(r, col);
            for (int j = 0; j < k; ++j) {
                m.at(r, j) -= f * m.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

double operator_norm(const CMatrix& a) {
    int k = a.dim();
    Eigen::MatrixXcd m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m(i, j) = std::complex<double>(a.at(i, j).to_double_re(), a.at(i, j).to_double_im());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return k == 0 ? 0.0 : svd.singularValues()(0);
}

}  // namespace cfree
