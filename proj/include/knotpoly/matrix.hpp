#pragma once

#include <functional>
#include <vector>

#include "knotpoly/laurent.hpp"
#include "knotpoly/quaternion.hpp"

namespace knotpoly {

template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T fill)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix identity(int n, const T& one, const T& zero) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_, data_.empty() ? T() : data_[0]);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix r(rows_, o.cols_, T());
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k)
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        return r;
    }
    Matrix operator+(const Matrix& o) const {
        if (cols_ != o.cols_ || rows_ != o.rows_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        if (cols_ != o.cols_ || rows_ != o.rows_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    Matrix minor_matrix(int drop_row, int drop_col) const {
        Matrix m(rows_ - 1, cols_ - 1, data_.empty() ? T() : data_[0]);
        for (int i = 0, mi = 0; i < rows_; ++i) {
            if (i == drop_row) continue;
            for (int j = 0, mj = 0; j < cols_; ++j) {
                if (j == drop_col) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

  private:
    int rows_, cols_;
    std::vector<T> data_;
};

// Fraction-free determinant (Bareiss). All intermediate divisions are exact
// in the coefficient ring; works over any integral domain with exact
// division, in particular multivariate Laurent rings.
template <class C>
Laurent<C> bareiss_det(Matrix<Laurent<C>> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    std::vector<Var> vars = m.at(0, 0).vars();
    Laurent<C> one = Laurent<C>::constant(vars, C(1));
    Laurent<C> prev = one;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero_poly()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero_poly()) { p = i; break; }
            if (p < 0) return Laurent<C>::zero(vars);
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Laurent<C> num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num.divide_exact_by(prev);
            }
            m.at(i, k) = Laurent<C>::zero(vars);
        }
        prev = m.at(k, k);
    }
    Laurent<C> det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

// Complex 2x2 embedding of a quaternion q = w + xi + yj + zk:
//   1 -> I,  i -> diag(i, -i),  j -> [[0,1],[-1,0]],  k -> [[0,i],[i,0]].
inline Matrix<Laurent<GaussInt>> complex_embedding(const Matrix<QuatLaurent>& q) {
    std::vector<Var> tv = QuatLaurent::tvar();
    auto lift = [&tv](const Laurent<Int>& re, const Laurent<Int>& im) {
        Laurent<GaussInt> p(tv);
        for (auto& [e, c] : re.terms()) p.add_term(e, GaussInt(c));
        for (auto& [e, c] : im.terms()) p.add_term(e, GaussInt(Int(0), c));
        return p;
    };
    Matrix<Laurent<GaussInt>> m(2 * q.rows(), 2 * q.cols(), Laurent<GaussInt>::zero(tv));
    for (int i = 0; i < q.rows(); ++i) {
        for (int j = 0; j < q.cols(); ++j) {
            const QuatLaurent& e = q.at(i, j);
            m.at(2 * i, 2 * j) = lift(e.w, e.x);
            m.at(2 * i, 2 * j + 1) = lift(e.y, e.z);
            m.at(2 * i + 1, 2 * j) = lift(-e.y, e.z);
            m.at(2 * i + 1, 2 * j + 1) = lift(e.w, -e.x);
        }
    }
    return m;
}

// Study determinant: ordinary determinant of the complex embedding.
inline Laurent<GaussInt> study_det(const Matrix<QuatLaurent>& q) {
    if (q.rows() != q.cols()) throw std::invalid_argument("study_det of non-square matrix");
    return bareiss_det(complex_embedding(q));
}

namespace detail {

inline Int content_gcd(Int a, const Int& b) { return int_gcd(a, b); }
inline GaussInt content_gcd(GaussInt a, const GaussInt& b) { return gauss_gcd(a, b); }

}  // namespace detail

// gcd of all coefficients (defined up to units).
template <class C>
C poly_content(const Laurent<C>& p) {
    C g(0);
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        (void)e;
        if (first) { g = c; first = false; }
        else g = detail::content_gcd(g, c);
    }
    return g;
}

// Univariate Laurent gcd over Z[t^±1] or Z[i][t^±1]: content/primitive-part
// factorization with a monic Euclid pass over the fraction field. The result
// is unit-normalized (units = coefficient units times powers of the
// variable).
template <class C>
Laurent<C> laurent_gcd(const Laurent<C>& a, const Laurent<C>& b) {
    using F = typename ring_traits<C>::field;
    if (a.vars() != b.vars() || a.vars().size() != 1)
        throw std::invalid_argument("laurent_gcd expects matching univariate polynomials");
    if (a.is_zero_poly()) return b.unit_normalized();
    if (b.is_zero_poly()) return a.unit_normalized();
    std::vector<Var> vars = a.vars();

    C ca = poly_content(a), cb = poly_content(b);
    C cg = detail::content_gcd(ca, cb);

    // primitive parts as dense coefficient vectors (min exponent -> 0)
    auto dense = [&](const Laurent<C>& p, const C& cont) {
        auto [lo, hi] = p.exp_range(0);
        std::vector<F> v(static_cast<size_t>(hi - lo + 1), F(0));
        for (auto& [e, c] : p.terms()) v[static_cast<size_t>(e[0] - lo)] = F(divide_exact(c, cont));
        return v;
    };
    std::vector<F> fa = dense(a, ca), fb = dense(b, cb);

    auto deg = [](const std::vector<F>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
            if (!is_zero(v[static_cast<size_t>(i)])) return i;
        return -1;
    };
    auto rem = [&](std::vector<F> n, const std::vector<F>& d) {
        int dd = deg(d);
        for (int dn = deg(n); dn >= dd && dn >= 0; dn = deg(n)) {
            F q = divide_exact(n[static_cast<size_t>(dn)], d[static_cast<size_t>(dd)]);
            for (int i = 0; i <= dd; ++i)
                n[static_cast<size_t>(dn - dd + i)] -= q * d[static_cast<size_t>(i)];
        }
        return n;
    };
    while (deg(fb) >= 0) {
        std::vector<F> r = rem(fa, fb);
        fa = fb;
        fb = r;
    }

    // clear denominators back into C and strip content
    // (F is Rat or GaussRat with Int/GaussInt numerators)
    Int den(1);
    auto lcm_den = [&den](const Rat& r) {
        Int d = r.get_den();
        den = den / int_gcd(den, d) * d;
    };
    for (auto& f : fa) {
        if constexpr (std::is_same_v<F, Rat>) lcm_den(f);
        else { lcm_den(f.re); lcm_den(f.im); }
    }
    Laurent<C> prim(vars);
    for (size_t i = 0; i < fa.size(); ++i) {
        if (is_zero(fa[i])) continue;
        C c;
        if constexpr (std::is_same_v<F, Rat>) {
            Rat scaled = fa[i] * Rat(den);
            c = C(scaled.get_num());
        } else {
            Rat sre = fa[i].re * Rat(den), sim = fa[i].im * Rat(den);
            c = C(GaussInt(sre.get_num(), sim.get_num()));
        }
        prim.add_term({static_cast<int>(i)}, c);
    }
    C pc = poly_content(prim);
    Laurent<C> prim_red(vars);
    for (auto& [e, c] : prim.terms()) prim_red.add_term(e, divide_exact(c, pc));

    return (prim_red * Laurent<C>::constant(vars, cg)).unit_normalized();
}

template <class C>
Laurent<C> laurent_gcd(const std::vector<Laurent<C>>& ps) {
    if (ps.empty()) throw std::invalid_argument("laurent_gcd of empty list");
    Laurent<C> g = ps[0];
    Laurent<C> one = Laurent<C>::constant(ps[0].vars(), C(1));
    for (size_t i = 1; i < ps.size(); ++i) {
        g = laurent_gcd(g, ps[i]);
        if (g == one) break;
    }
    return g.unit_normalized();
}

}  // namespace knotpoly
