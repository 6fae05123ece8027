#pragma once

#include "knotpoly/laurent.hpp"

namespace knotpoly {

// Quaternion with Laurent-polynomial components in the single central
// variable t: q = w + x i + y j + z k, integer coefficients.
struct QuatLaurent {
    using Poly = Laurent<Int>;
    Poly w, x, y, z;

    static std::vector<Var> tvar() { return {Var{"t", 1}}; }

    QuatLaurent()
        : w(Poly::zero(tvar())), x(Poly::zero(tvar())), y(Poly::zero(tvar())),
          z(Poly::zero(tvar())) {}
    QuatLaurent(Poly w_, Poly x_, Poly y_, Poly z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static QuatLaurent scalar(long v) {
        QuatLaurent q;
        q.w = Poly::constant(tvar(), Int(v));
        return q;
    }
    // c * u * t^k for a basis unit u in {1,i,j,k}
    static QuatLaurent unit_term(char unit, int tpow, long c = 1) {
        QuatLaurent q;
        Poly m = Poly::monomial(tvar(), "t", tpow, Int(c));
        switch (unit) {
            case '1': q.w = m; break;
            case 'i': q.x = m; break;
            case 'j': q.y = m; break;
            case 'k': q.z = m; break;
            default: throw std::invalid_argument("bad quaternion unit");
        }
        return q;
    }

    bool is_zero_q() const {
        return w.is_zero_poly() && x.is_zero_poly() && y.is_zero_poly() && z.is_zero_poly();
    }

    QuatLaurent operator-() const { return {-w, -x, -y, -z}; }
    QuatLaurent operator+(const QuatLaurent& o) const {
        return {w + o.w, x + o.x, y + o.y, z + o.z};
    }
    QuatLaurent operator-(const QuatLaurent& o) const {
        return {w - o.w, x - o.x, y - o.y, z - o.z};
    }
    // Hamilton product; t is central so components multiply commutatively.
    QuatLaurent operator*(const QuatLaurent& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }
    QuatLaurent& operator+=(const QuatLaurent& o) { *this = *this + o; return *this; }
    QuatLaurent& operator-=(const QuatLaurent& o) { *this = *this - o; return *this; }
    QuatLaurent& operator*=(const QuatLaurent& o) { *this = *this * o; return *this; }
    bool operator==(const QuatLaurent& o) const {
        return w == o.w && x == o.x && y == o.y && z == o.z;
    }
    bool operator!=(const QuatLaurent& o) const { return !(*this == o); }

    QuatLaurent conj() const { return {w, -x, -y, -z}; }

    std::string to_string() const {
        std::string s;
        auto piece = [&s](const Poly& p, const char* unit) {
            if (p.is_zero_poly()) return;
            if (!s.empty()) s += " + ";
            s += "(" + p.to_string() + ")" + unit;
        };
        piece(w, "");
        piece(x, "i");
        piece(y, "j");
        piece(z, "k");
        return s.empty() ? "0" : s;
    }
};

inline bool is_zero(const QuatLaurent& q) { return q.is_zero_q(); }
inline std::string str(const QuatLaurent& q) { return q.to_string(); }

}  // namespace knotpoly
