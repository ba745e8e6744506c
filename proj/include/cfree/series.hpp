#pragma once

#include "cfree/matrix.hpp"
#include "cfree/rational.hpp"

#include <stdexcept>
#include <vector>

namespace cfree {

namespace detail {
inline CScalar zero_like(const CScalar&) { return CScalar::zero(); }
inline CScalar one_like(const CScalar&) { return CScalar::one(); }
inline CMatrix zero_like(const CMatrix& m) { return CMatrix::zero(m.dim()); }
inline CMatrix one_like(const CMatrix& m) { return CMatrix::identity(m.dim()); }
inline bool invertible_const(const CScalar& z) { return !z.is_zero(); }
bool invertible_const(const CMatrix& m);
inline CScalar invert_const(const CScalar& z) { return z.inverse(); }
inline CMatrix invert_const(const CMatrix& m) { return matrix_inverse(m); }
}  // namespace detail

/// Power series truncated at an explicit order N: coefficients for z^0..z^N.
/// Coefficients are exact complex rationals or matrices of them; the order is
/// part of the value and never changes silently.
template <typename T>
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
    }
    static TruncatedSeries zeros(int order, const T& sample) {
        return TruncatedSeries(std::vector<T>(order + 1, detail::zero_like(sample)));
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& operator[](int d) const { return c_.at(d); }
    T& operator[](int d) { return c_.at(d); }
    const std::vector<T>& coeffs() const { return c_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (size_t d = 0; d < c_.size(); ++d) c_[d] += o.c_[d];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (size_t d = 0; d < c_.size(); ++d) c_[d] -= o.c_[d];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    /// Cauchy product truncated at the shared order; the coefficient order is
    /// preserved left-to-right, so non-commuting coefficients are safe.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries r = zeros(a.order(), a.c_[0]);
        for (int d = 0; d <= a.order(); ++d)
            for (int j = 0; j <= d; ++j) r.c_[d] += a.c_[j] * b.c_[d - j];
        return r;
    }

    /// Multiplicative inverse up to the truncation order; needs an invertible
    /// constant coefficient.
    TruncatedSeries inverse() const {
        if (!detail::invertible_const(c_[0]))
            throw std::domain_error("series_inverse: constant coefficient not invertible");
        TruncatedSeries g = zeros(order(), c_[0]);
        T c0inv = detail::invert_const(c_[0]);
        g.c_[0] = c0inv;
        for (int d = 1; d <= order(); ++d) {
            T acc = detail::zero_like(c_[0]);
            for (int j = 1; j <= d; ++j) acc += c_[j] * g.c_[d - j];
            g.c_[d] = detail::zero_like(c_[0]) - c0inv * acc;
        }
        return g;
    }

    /// Coefficients of f(z)/z; requires f(0) = 0. The result keeps the same
    /// order with a zero top coefficient, which callers may ignore.
    TruncatedSeries shift_down() const {
        if (!(c_[0] == detail::zero_like(c_[0])))
            throw std::domain_error("shift_down: nonzero constant coefficient");
        TruncatedSeries r = zeros(order(), c_[0]);
        for (int d = 1; d <= order(); ++d) r.c_[d - 1] = c_[d];
        return r;
    }

    TruncatedSeries truncated(int new_order) const {
        if (new_order > order()) throw std::invalid_argument("truncated: cannot extend a series");
        std::vector<T> cc(c_.begin(), c_.begin() + new_order + 1);
        return TruncatedSeries(std::move(cc));
    }

private:
    void check_order(const TruncatedSeries& o) const {
        if (o.c_.size() != c_.size()) throw std::invalid_argument("series order mismatch");
    }
    std::vector<T> c_;
};

using ScalarSeries = TruncatedSeries<CScalar>;
using MatrixSeries = TruncatedSeries<CMatrix>;

/// f composed with a scalar series g, g(0) = 0; matrix coefficients of f
/// multiply scalar powers of g.
template <typename T>
TruncatedSeries<T> series_compose(const TruncatedSeries<T>& f, const ScalarSeries& g) {
    if (f.order() != g.order()) throw std::invalid_argument("series order mismatch");
    if (!g[0].is_zero()) throw std::domain_error("series_compose: g(0) != 0");
    int n = f.order();
    TruncatedSeries<T> r = TruncatedSeries<T>::zeros(n, f[0]);
    // powers of g accumulated degree by degree
    ScalarSeries gp = ScalarSeries::zeros(n, CScalar());
    gp[0] = CScalar::one();
    for (int m = 0; m <= n; ++m) {
        for (int d = 0; d <= n; ++d)
            if (!gp[d].is_zero()) r[d] += gp[d] * f[m];
        if (m < n) gp = gp * g;
    }
    return r;
}

/// Embed a scalar series into matrix series as multiples of the identity.
MatrixSeries promote(const ScalarSeries& s, int dim);

/// Scalar series times a matrix series (coefficientwise scalar action).
MatrixSeries scale(const ScalarSeries& s, const MatrixSeries& m);

}  // namespace cfree
