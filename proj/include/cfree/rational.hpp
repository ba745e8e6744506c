#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cfree {

using Rat = mpq_class;

/// Exact complex number with rational real and imaginary parts.
/// mpq_class keeps every value reduced with a positive denominator.
struct CScalar {
    Rat re;
    Rat im;

    CScalar() : re(0), im(0) {}
    CScalar(long r) : re(r), im(0) {}
    CScalar(const Rat& r) : re(r), im(0) {}
    CScalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static CScalar zero() { return CScalar(); }
    static CScalar one() { return CScalar(1); }
    static CScalar i() { return CScalar(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    CScalar conj() const { return CScalar(re, -im); }
    Rat norm_sq() const { return re * re + im * im; }

    CScalar operator-() const { return CScalar(-re, -im); }

    CScalar& operator+=(const CScalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CScalar& operator-=(const CScalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    CScalar& operator*=(const CScalar& o) {
        Rat r = re * o.re - im * o.im;
        Rat i2 = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i2);
        return *this;
    }

    friend CScalar operator+(CScalar a, const CScalar& b) { return a += b; }
    friend CScalar operator-(CScalar a, const CScalar& b) { return a -= b; }
    friend CScalar operator*(CScalar a, const CScalar& b) { return a *= b; }

    CScalar inverse() const {
        Rat n = norm_sq();
        if (n == 0) throw std::domain_error("division by zero CScalar");
        return CScalar(re / n, -im / n);
    }
    friend CScalar operator/(const CScalar& a, const CScalar& b) { return a * b.inverse(); }
    CScalar& operator/=(const CScalar& b) { return *this = *this * b.inverse(); }

    friend bool operator==(const CScalar& a, const CScalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CScalar& a, const CScalar& b) { return !(a == b); }

    double to_double_re() const { return re.get_d(); }
    double to_double_im() const { return im.get_d(); }
};

/// Parse "p/q" or "p" into an exact rational.
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& r);
std::string cscalar_to_string(const CScalar& z);

}  // namespace cfree
