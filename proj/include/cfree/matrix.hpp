#pragma once

#include "cfree/rational.hpp"

#include <vector>

namespace cfree {

/// Dense square matrix over exact complex rationals; the concrete model of
/// the target algebra B = M_k.
class CMatrix {
public:
    CMatrix() : k_(0) {}
    explicit CMatrix(int k) : k_(k), e_(static_cast<size_t>(k) * k) {}

    static CMatrix identity(int k);
    static CMatrix zero(int k) { return CMatrix(k); }
    static CMatrix scalar(int k, const CScalar& z);

    int dim() const { return k_; }

    CScalar& at(int i, int j) { return e_[static_cast<size_t>(i) * k_ + j]; }
    const CScalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * k_ + j]; }

    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;

    CMatrix adjoint() const;  // conjugate transpose

    CMatrix operator-() const;
    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    CMatrix& operator*=(const CMatrix& o) { return *this = *this * o; }
    friend CMatrix operator*(const CScalar& s, CMatrix a);
    CMatrix& operator*=(const CScalar& s);

    friend bool operator==(const CMatrix& a, const CMatrix& b) { return a.k_ == b.k_ && a.e_ == b.e_; }
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

private:
    int k_;
    std::vector<CScalar> e_;
};

/// Exact inverse over the rationals; throws std::domain_error on a singular input.
CMatrix matrix_inverse(const CMatrix& a);

/// Largest singular value, computed in floating point (Eigen).
double operator_norm(const CMatrix& a);

}  // namespace cfree
