#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "perimap/rational.hpp"

namespace perimap {

// Double-double value (~106-bit mantissa): unevaluated sum hi + lo with
// |lo| <= ulp(hi)/2. Provides the extended-precision mode used by the
// polynomial root finder and high-accuracy evaluation.
struct DD {
    double hi = 0.0, lo = 0.0;

    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}

    static DD two_sum(double a, double b) {
        double s = a + b;
        double bb = s - a;
        double err = (a - (s - bb)) + (b - bb);
        return {s, err};
    }
    static DD quick_two_sum(double a, double b) {  // requires |a| >= |b|
        double s = a + b;
        return {s, b - (s - a)};
    }
    static DD two_prod(double a, double b) {
        double p = a * b;
        return {p, std::fma(a, b, -p)};
    }

    friend DD operator+(const DD& a, const DD& b) {
        DD s = two_sum(a.hi, b.hi);
        s.lo += a.lo + b.lo;
        return quick_two_sum(s.hi, s.lo);
    }
    friend DD operator-(const DD& a, const DD& b) { return a + DD(-b.hi, -b.lo); }
    friend DD operator-(const DD& a) { return {-a.hi, -a.lo}; }
    friend DD operator*(const DD& a, const DD& b) {
        DD p = two_prod(a.hi, b.hi);
        p.lo += a.hi * b.lo + a.lo * b.hi;
        return quick_two_sum(p.hi, p.lo);
    }
    friend DD operator/(const DD& a, const DD& b) {
        double q1 = a.hi / b.hi;
        DD r = a - b * DD(q1);
        double q2 = r.hi / b.hi;
        r = r - b * DD(q2);
        double q3 = r.hi / b.hi;
        DD q = quick_two_sum(q1, q2);
        return q + DD(q3);
    }

    DD& operator+=(const DD& o) { return *this = *this + o; }
    DD& operator-=(const DD& o) { return *this = *this - o; }
    DD& operator*=(const DD& o) { return *this = *this * o; }
    DD& operator/=(const DD& o) { return *this = *this / o; }

    bool operator<(const DD& o) const { return hi < o.hi || (hi == o.hi && lo < o.lo); }
    bool operator>(const DD& o) const { return o < *this; }
    bool operator==(const DD& o) const { return hi == o.hi && lo == o.lo; }

    double to_double() const { return hi + lo; }
};

inline DD dd_abs(const DD& a) { return a.hi < 0 || (a.hi == 0 && a.lo < 0) ? -a : a; }

inline DD dd_sqrt(const DD& a) {
    if (a.hi == 0.0 && a.lo == 0.0) return DD(0.0);
    double x = std::sqrt(a.hi);
    // one Newton step: x' = (x + a/x)/2 in double-double
    DD xd(x);
    return (xd + a / xd) * DD(0.5);
}

// Exact conversion: hi = nearest double, lo = nearest double of the residue.
inline DD dd_from_rat(const Rat& r) {
    double hi = r.get_d();
    Rat resid = r - Rat(hi);
    return DD::quick_two_sum(hi, resid.get_d());
}

// Complex double-double.
struct CDD {
    DD re, im;

    CDD() = default;
    CDD(double r, double i = 0.0) : re(r), im(i) {}
    CDD(const DD& r, const DD& i = DD()) : re(r), im(i) {}
    explicit CDD(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}

    friend CDD operator+(const CDD& a, const CDD& b) { return {a.re + b.re, a.im + b.im}; }
    friend CDD operator-(const CDD& a, const CDD& b) { return {a.re - b.re, a.im - b.im}; }
    friend CDD operator-(const CDD& a) { return {-a.re, -a.im}; }
    friend CDD operator*(const CDD& a, const CDD& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CDD operator/(const CDD& a, const CDD& b) {
        DD n2 = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
    }
    CDD& operator+=(const CDD& o) { return *this = *this + o; }
    CDD& operator-=(const CDD& o) { return *this = *this - o; }
    CDD& operator*=(const CDD& o) { return *this = *this * o; }
    CDD& operator/=(const CDD& o) { return *this = *this / o; }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

inline DD cdd_abs2(const CDD& z) { return z.re * z.re + z.im * z.im; }
inline double cdd_abs(const CDD& z) { return std::sqrt(cdd_abs2(z).to_double()); }

inline CDD cdd_sqrt(const CDD& z) {
    // principal branch
    DD r = dd_sqrt(cdd_abs2(z));
    DD re2 = (r + dd_abs(z.re)) * DD(0.5);
    DD u = dd_sqrt(re2);
    if (u.hi == 0.0) return CDD(DD(0.0), DD(0.0));
    DD v = dd_abs(z.im) / (u * DD(2.0));
    if (z.re.hi >= 0) {
        return {u, z.im.hi >= 0 ? v : -v};
    }
    return {v, z.im.hi >= 0 ? u : -u};
}

}  // namespace perimap
