#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace knotpoly {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline std::string str(const Int& a) { return a.get_str(); }
inline std::string str(const Rat& a) { return a.get_str(); }

// Exact division; throws if b does not divide a.
inline Int divide_exact(const Int& a, const Int& b) {
    if (is_zero(b)) throw std::domain_error("division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (!is_zero(r)) throw std::domain_error("inexact integer division");
    return q;
}
inline Rat divide_exact(const Rat& a, const Rat& b) {
    if (is_zero(b)) throw std::domain_error("division by zero");
    return a / b;
}

// Gaussian integers Z[i].
struct GaussInt {
    Int re, im;

    GaussInt() : re(0), im(0) {}
    GaussInt(long r) : re(r), im(0) {}
    GaussInt(Int r) : re(std::move(r)), im(0) {}
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    static GaussInt unit_i() { return GaussInt(Int(0), Int(1)); }

    GaussInt conj() const { return GaussInt(re, -im); }
    Int norm() const { return re * re + im * im; }

    GaussInt operator-() const { return GaussInt(-re, -im); }
    GaussInt operator+(const GaussInt& o) const { return GaussInt(re + o.re, im + o.im); }
    GaussInt operator-(const GaussInt& o) const { return GaussInt(re - o.re, im - o.im); }
    GaussInt operator*(const GaussInt& o) const {
        return GaussInt(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussInt& operator+=(const GaussInt& o) { re += o.re; im += o.im; return *this; }
    GaussInt& operator-=(const GaussInt& o) { re -= o.re; im -= o.im; return *this; }
    GaussInt& operator*=(const GaussInt& o) { *this = *this * o; return *this; }
    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }
};

inline bool is_zero(const GaussInt& a) { return is_zero(a.re) && is_zero(a.im); }

inline std::string str(const GaussInt& a) {
    if (is_zero(a.im)) return str(a.re);
    std::string i_part = (a.im == 1) ? "i" : (a.im == -1) ? "-i" : str(a.im) + "i";
    if (is_zero(a.re)) return i_part;
    std::string s = "(" + str(a.re);
    if (sgn(a.im) >= 0) s += "+";
    return s + i_part + ")";
}

inline GaussInt divide_exact(const GaussInt& a, const GaussInt& b) {
    if (is_zero(b)) throw std::domain_error("division by zero");
    GaussInt p = a * b.conj();
    Int n = b.norm();
    return GaussInt(divide_exact(p.re, n), divide_exact(p.im, n));
}

// Nearest-integer rounding of a/b.
inline Int round_div(const Int& a, const Int& b) {
    Int num = 2 * a + b, den = 2 * b, q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Euclidean gcd in Z[i] (defined up to units).
inline GaussInt gauss_gcd(GaussInt a, GaussInt b) {
    while (!is_zero(b)) {
        GaussInt p = a * b.conj();
        Int n = b.norm();
        GaussInt q(round_div(p.re, n), round_div(p.im, n));
        GaussInt r = a - q * b;
        a = b;
        b = r;
    }
    return a;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Q(i), the fraction field of Z[i].
struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(const GaussInt& g) : re(g.re), im(g.im) {}

    GaussRat conj() const { return GaussRat(re, -im); }
    Rat norm() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(-re, -im); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
};

inline bool is_zero(const GaussRat& a) { return is_zero(a.re) && is_zero(a.im); }

inline std::string str(const GaussRat& a) {
    if (is_zero(a.im)) return str(a.re);
    std::string i_part = (a.im == 1) ? "i" : (a.im == -1) ? "-i" : str(a.im) + "i";
    if (is_zero(a.re)) return i_part;
    std::string s = "(" + str(a.re);
    if (sgn(a.im) >= 0) s += "+";
    return s + i_part + ")";
}

inline GaussRat divide_exact(const GaussRat& a, const GaussRat& b) {
    if (is_zero(b)) throw std::domain_error("division by zero");
    GaussRat p = a * b.conj();
    Rat n = b.norm();
    return GaussRat(p.re / n, p.im / n);
}

// Canonical-unit conventions. A coefficient is "display positive" when it
// survives unit_normalize unchanged; unit_candidates lists the coefficient
// units of the ring.
inline bool display_positive(const Int& a) { return sgn(a) > 0; }
inline bool display_positive(const Rat& a) { return sgn(a) > 0; }
inline bool display_positive(const GaussInt& a) {
    if (sgn(a.re) != 0) return sgn(a.re) > 0;
    return sgn(a.im) > 0;
}
inline bool display_positive(const GaussRat& a) {
    if (sgn(a.re) != 0) return sgn(a.re) > 0;
    return sgn(a.im) > 0;
}

template <class C>
struct ring_traits;

template <>
struct ring_traits<Int> {
    static constexpr const char* name = "Int";
    using field = Rat;
    static std::vector<Int> units() { return {Int(1), Int(-1)}; }
};
template <>
struct ring_traits<Rat> {
    static constexpr const char* name = "Rational";
    using field = Rat;
    static std::vector<Rat> units() { return {Rat(1), Rat(-1)}; }
};
template <>
struct ring_traits<GaussInt> {
    static constexpr const char* name = "GaussInt";
    using field = GaussRat;
    static std::vector<GaussInt> units() {
        return {GaussInt(1), GaussInt(-1), GaussInt(Int(0), Int(1)), GaussInt(Int(0), Int(-1))};
    }
};
template <>
struct ring_traits<GaussRat> {
    static constexpr const char* name = "GaussRat";
    using field = GaussRat;
    static std::vector<GaussRat> units() {
        return {GaussRat(1), GaussRat(-1), GaussRat(Rat(0), Rat(1)), GaussRat(Rat(0), Rat(-1))};
    }
};

}  // namespace knotpoly
