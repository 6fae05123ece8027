#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotpoly/scalars.hpp"

namespace knotpoly {

// A polynomial variable. Exponents of the variable are stored as integer
// multiples of 1/eden, so eden=4 admits quarter-integer powers exactly.
struct Var {
    std::string name;
    int eden = 1;

    bool operator==(const Var& o) const { return name == o.name && eden == o.eden; }
    bool operator!=(const Var& o) const { return !(*this == o); }
};

inline std::vector<Var> vars_of(std::initializer_list<const char*> names) {
    std::vector<Var> v;
    for (auto* n : names) v.push_back(Var{n, 1});
    return v;
}

// Exact multivariate Laurent polynomial over coefficient ring C.
// Invariants: no stored coefficient is zero; every exponent vector has
// length vars().size().
template <class C>
class Laurent {
  public:
    using Exp = std::vector<int>;
    using Terms = std::map<Exp, C>;

    Laurent() = default;
    explicit Laurent(std::vector<Var> vars) : vars_(std::move(vars)) {}

    static Laurent zero(std::vector<Var> vars) { return Laurent(std::move(vars)); }

    static Laurent constant(std::vector<Var> vars, C c) {
        Laurent p(std::move(vars));
        if (!is_zero(c)) p.terms_[Exp(p.vars_.size(), 0)] = std::move(c);
        return p;
    }

    // c * v^k where the exponent k is in units of 1/eden(v).
    static Laurent monomial(std::vector<Var> vars, const std::string& v, int k, C c = C(1)) {
        Laurent p(std::move(vars));
        if (is_zero(c)) return p;
        Exp e(p.vars_.size(), 0);
        e[p.var_index(v)] = k;
        p.terms_[std::move(e)] = std::move(c);
        return p;
    }

    const std::vector<Var>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown variable: " + name);
    }

    void add_term(const Exp& e, const C& c) {
        if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
        if (is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    Laurent operator-() const {
        Laurent r(vars_);
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    Laurent operator+(const Laurent& o) const {
        check_same_ring(o);
        Laurent r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    Laurent operator-(const Laurent& o) const {
        check_same_ring(o);
        Laurent r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    Laurent operator*(const Laurent& o) const {
        check_same_ring(o);
        Laurent r(vars_);
        for (auto& [e1, c1] : terms_) {
            for (auto& [e2, c2] : o.terms_) {
                Exp e = e1;
                for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        }
        return r;
    }
    Laurent& operator+=(const Laurent& o) { *this = *this + o; return *this; }
    Laurent& operator-=(const Laurent& o) { *this = *this - o; return *this; }
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    Laurent operator*(const C& c) const {
        Laurent r(vars_);
        if (is_zero(c)) return r;
        for (auto& [e, k] : terms_) {
            C p = k * c;
            if (!is_zero(p)) r.terms_[e] = std::move(p);
        }
        return r;
    }

    bool operator==(const Laurent& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent pow(long n) const {
        if (n < 0) {
            // only monomials are invertible
            if (terms_.size() != 1) throw std::domain_error("negative power of non-monomial");
            auto& [e, c] = *terms_.begin();
            Exp ie(e.size());
            for (size_t i = 0; i < e.size(); ++i) ie[i] = -e[i];
            C ic = divide_exact(C(1), c);
            Laurent base(vars_);
            base.terms_[ie] = ic;
            return base.pow(-n);
        }
        Laurent r = constant(vars_, C(1));
        Laurent b = *this;
        while (n > 0) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    // Multiply by the monomial prod v_i^{k_i} (exponent units 1/eden).
    Laurent shifted(const Exp& k) const {
        Laurent r(vars_);
        for (auto& [e, c] : terms_) {
            Exp e2 = e;
            for (size_t i = 0; i < e2.size(); ++i) e2[i] += k[i];
            r.terms_[e2] = c;
        }
        return r;
    }

    // Largest exponent vector in descending lexicographic term order.
    const std::pair<const Exp, C>& leading() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    std::pair<int, int> exp_range(int vi) const {
        int lo = 0, hi = 0;
        bool first = true;
        for (auto& [e, c] : terms_) {
            if (first) { lo = hi = e[vi]; first = false; }
            lo = std::min(lo, e[vi]);
            hi = std::max(hi, e[vi]);
        }
        return {lo, hi};
    }

    void check_same_ring(const Laurent& o) const {
        if (vars_ != o.vars_)
            throw std::invalid_argument("polynomial variable/ring mismatch");
    }

    // ---- substitution -------------------------------------------------

    struct MonomialImage {
        bool negate = false;
        // (variable name, numerator, denominator): var -> v^{num/den}
        std::vector<std::tuple<std::string, int, int>> factors;
    };

    // Substitute each bound variable by a signed monomial. Unbound variables
    // pass through. Fractional target exponents are carried exactly via the
    // eden mechanism; denominators must divide 4.
    Laurent substitute(const std::map<std::string, MonomialImage>& bindings) const {
        // the output variable set: unbound vars keep (name, eden); bound vars
        // contribute their target variables with eden = lcm of existing and
        // needed denominators.
        std::vector<Var> out;
        auto ensure = [&out](const std::string& n, int eden) {
            for (auto& v : out)
                if (v.name == n) {
                    v.eden = std::lcm(v.eden, eden);
                    return;
                }
            out.push_back(Var{n, eden});
        };
        for (auto& v : vars_) {
            if (!bindings.count(v.name)) ensure(v.name, v.eden);
        }
        for (auto& [src, img] : bindings) {
            (void)src;
            for (auto& [tgt, num, den] : img.factors) {
                (void)num;
                if (den != 1 && den != 2 && den != 4)
                    throw std::invalid_argument("substitution denominator must divide 4");
                ensure(tgt, den);
            }
        }
        for (auto& [src, img] : bindings) {
            (void)img;
            if (std::none_of(vars_.begin(), vars_.end(),
                             [&](const Var& v) { return v.name == src; }))
                throw std::invalid_argument("substitution of unknown variable: " + src);
            int vi = var_index(src);
            if (vars_[vi].eden != 1)
                throw std::invalid_argument("substituted variable must have integer exponents");
        }

        Laurent r(out);
        for (auto& [e, c] : terms_) {
            Exp oe(out.size(), 0);
            bool neg = false;
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto bit = bindings.find(vars_[i].name);
                if (bit == bindings.end()) {
                    oe[r.var_index(vars_[i].name)] += e[i];
                    continue;
                }
                const MonomialImage& img = bit->second;
                if (img.negate && (e[i] % 2 != 0)) neg = !neg;
                for (auto& [tgt, num, den] : img.factors) {
                    int oi = r.var_index(tgt);
                    int eden = r.vars_[oi].eden;
                    long contrib = static_cast<long>(e[i]) * num * (eden / den);
                    oe[oi] += static_cast<int>(contrib);
                }
            }
            C cc = neg ? C(-c) : c;
            r.add_term(oe, cc);
        }
        return r;
    }

    // Convenience: v -> sign * w^{num/den}.
    Laurent substitute_one(const std::string& v, bool negate, const std::string& w, int num,
                           int den) const {
        MonomialImage img;
        img.negate = negate;
        img.factors.push_back({w, num, den});
        return substitute({{v, img}});
    }

    // ---- canonical form up to units -----------------------------------

    // Canonical representative modulo the unit group {units of C} x {v^k}:
    // every variable's minimum exponent is shifted to 0 and the coefficient
    // of the descending-lex leading term is made display-positive.
    Laurent unit_normalized() const {
        if (terms_.empty()) return *this;
        Laurent r(vars_);
        Exp shift(vars_.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i) shift[i] = -exp_range(static_cast<int>(i)).first;
        for (auto& [e, c] : terms_) {
            Exp e2 = e;
            for (size_t i = 0; i < e2.size(); ++i) e2[i] += shift[i];
            r.terms_[e2] = c;
        }
        const C lead = r.leading().second;
        if (!display_positive(lead)) {
            for (const C& u : ring_traits<C>::units()) {
                C scaled = lead;
                scaled *= u;
                if (display_positive(scaled)) {
                    for (auto& [e, c] : r.terms_) c *= u;
                    break;
                }
            }
        }
        return r;
    }

    // ---- exact division (integral domains) ----------------------------

    // Quotient of an exact division; throws std::domain_error otherwise.
    Laurent divide_exact_by(const Laurent& d) const {
        check_same_ring(d);
        if (d.is_zero_poly()) throw std::domain_error("polynomial division by zero");
        Laurent n = *this;
        Laurent q(vars_);
        if (n.is_zero_poly()) return q;
        // Newton-polytope bounds: any exponent of an exact quotient lies in
        // [min_n - min_d, max_n - max_d] coordinatewise. Falling outside
        // proves inexactness (plain lex descent does not terminate in a
        // Laurent ring).
        size_t nv = vars_.size();
        Exp qlo(nv), qhi(nv);
        for (size_t i = 0; i < nv; ++i) {
            auto rn = exp_range(static_cast<int>(i));
            auto rd = d.exp_range(static_cast<int>(i));
            qlo[i] = rn.first - rd.first;
            qhi[i] = rn.second - rd.second;
        }
        const Exp de = d.leading().first;
        const C dc = d.leading().second;
        while (!n.is_zero_poly()) {
            const Exp ne = n.leading().first;
            const C nc = n.leading().second;
            Exp qe(ne.size());
            for (size_t i = 0; i < qe.size(); ++i) {
                qe[i] = ne[i] - de[i];
                if (qe[i] < qlo[i] || qe[i] > qhi[i])
                    throw std::domain_error("inexact polynomial division");
            }
            C qc = knotpoly::divide_exact(nc, dc);
            Laurent t(vars_);
            t.terms_[qe] = qc;
            q.add_term(qe, qc);
            n -= t * d;
            if (!n.is_zero_poly() && !(n.leading().first < ne))
                throw std::domain_error("inexact polynomial division");
        }
        return q;
    }

    // ---- rendering -----------------------------------------------------

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            bool neg = !display_positive(c) && is_negatable(c);
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            C cc = neg ? C(-c) : c;
            std::string mono = monomial_string(e);
            std::string cs = str(cc);
            if (mono.empty()) {
                os << cs;
            } else if (cs == "1") {
                os << mono;
            } else {
                os << cs << mono;
            }
        }
        return os.str();
    }

    // ---- parsing (inverse of to_string, plus whitespace/'*' freedom) ----

    static Laurent parse(const std::string& text, std::vector<Var> vars);

  private:
    static bool is_negatable(const C& c) { return display_positive(C(-c)); }

    std::string monomial_string(const Exp& e) const {
        std::string s;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            s += vars_[i].name;
            int num = e[i], den = vars_[i].eden;
            int g = std::gcd(std::abs(num), den);
            num /= g;
            int d = den / g;
            if (d == 1) {
                if (num != 1) s += "^" + std::to_string(num);
            } else {
                s += "^(" + std::to_string(num) + "/" + std::to_string(d) + ")";
            }
        }
        return s;
    }

    std::vector<Var> vars_;
    Terms terms_;
};

namespace detail {

struct PolyLexer {
    const std::string& s;
    size_t i = 0;

    explicit PolyLexer(const std::string& text) : s(text) {}
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        size_t j = i;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        size_t k = j;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == j) throw std::invalid_argument("expected integer in polynomial at '" +
                                                s.substr(i, 8) + "'");
        std::string r = s.substr(i, k - i);
        i = k;
        return r;
    }
    std::string ident() {
        skip_ws();
        size_t k = i;
        while (k < s.size() &&
               (std::isalpha(static_cast<unsigned char>(s[k])) || s[k] == '_')) ++k;
        std::string r = s.substr(i, k - i);
        i = k;
        return r;
    }
};

// Coefficient parsing per ring.
inline void parse_coeff(PolyLexer& lx, Int& out) { out = Int(lx.integer()); }
inline void parse_coeff(PolyLexer& lx, Rat& out) {
    Int num(lx.integer());
    if (lx.accept('/')) {
        Int den(lx.integer());
        out = Rat(num) / Rat(den);
    } else {
        out = Rat(num);
    }
    out.canonicalize();
}
inline void parse_coeff(PolyLexer& lx, GaussInt& out) {
    if (lx.accept('(')) {
        Int re(lx.integer());
        lx.skip_ws();
        // imaginary part: sign, optional magnitude, then 'i'
        int s = 1;
        if (lx.accept('-')) s = -1;
        else if (!lx.accept('+'))
            throw std::invalid_argument("expected sign in Gaussian coefficient");
        Int im(1);
        lx.skip_ws();
        if (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i])))
            im = Int(lx.integer());
        if (!lx.accept('i')) throw std::invalid_argument("expected 'i' in Gaussian coefficient");
        if (!lx.accept(')')) throw std::invalid_argument("expected ')' in Gaussian coefficient");
        out = GaussInt(re, s < 0 ? Int(-im) : im);
        return;
    }
    Int v(lx.integer());
    if (lx.accept('i'))
        out = GaussInt(Int(0), v);
    else
        out = GaussInt(v);
}
inline void parse_coeff(PolyLexer& lx, GaussRat& out) {
    GaussInt g;
    parse_coeff(lx, g);
    out = GaussRat(Rat(g.re), Rat(g.im));
}

}  // namespace detail

template <class C>
Laurent<C> Laurent<C>::parse(const std::string& text, std::vector<Var> vars) {
    Laurent<C> p(std::move(vars));
    detail::PolyLexer lx(text);
    if (lx.eof()) throw std::invalid_argument("empty polynomial text");
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.accept('+')) {
            sign = 1;
        } else if (lx.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in polynomial at position " +
                                        std::to_string(lx.i));
        }
        first = false;
        C coeff(1);
        bool have_coeff = false;
        char c = lx.peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
            detail::parse_coeff(lx, coeff);
            have_coeff = true;
        } else if (c == 'i' && std::islower(static_cast<unsigned char>(c))) {
            // bare imaginary unit only makes sense for Gaussian rings; let
            // parse_coeff via ident path fail for others.
        }
        Exp e(p.vars_.size(), 0);
        bool have_var = false;
        for (;;) {
            lx.accept('*');
            lx.skip_ws();
            if (lx.i >= lx.s.size()) break;
            // longest variable-name match at the current position
            int vi = -1;
            size_t best = 0;
            for (size_t v = 0; v < p.vars_.size(); ++v) {
                const std::string& nm = p.vars_[v].name;
                if (lx.s.compare(lx.i, nm.size(), nm) == 0 && nm.size() > best) {
                    vi = static_cast<int>(v);
                    best = nm.size();
                }
            }
            if (vi < 0) {
                if (lx.s[lx.i] == 'i') {
                    // imaginary unit as a coefficient factor (Gaussian rings)
                    if constexpr (std::is_same_v<C, GaussInt>) {
                        coeff = coeff * GaussInt::unit_i();
                        have_coeff = true;
                        ++lx.i;
                        continue;
                    } else if constexpr (std::is_same_v<C, GaussRat>) {
                        coeff = coeff * GaussRat(Rat(0), Rat(1));
                        have_coeff = true;
                        ++lx.i;
                        continue;
                    }
                }
                if (std::isalpha(static_cast<unsigned char>(lx.s[lx.i])))
                    throw std::invalid_argument("unknown variable at '" + lx.s.substr(lx.i, 8) +
                                                "' in polynomial");
                break;
            }
            lx.i += best;
            int num = 1, den = 1;
            if (lx.accept('^')) {
                if (lx.accept('(')) {
                    num = std::stoi(lx.integer());
                    if (lx.accept('/')) den = std::stoi(lx.integer());
                    if (!lx.accept(')'))
                        throw std::invalid_argument("expected ')' in exponent");
                } else {
                    num = std::stoi(lx.integer());
                }
            }
            int eden = p.vars_[vi].eden;
            if (eden % den != 0)
                throw std::invalid_argument("exponent denominator " + std::to_string(den) +
                                            " not supported by variable " + p.vars_[vi].name);
            e[vi] += num * (eden / den);
            have_var = true;
        }
        if (!have_coeff && !have_var)
            throw std::invalid_argument("empty term in polynomial at position " +
                                        std::to_string(lx.i));
        if (sign < 0) coeff = -coeff;
        p.add_term(e, coeff);
    }
    return p;
}

template <class C>
inline std::string str(const Laurent<C>& p) {
    return p.to_string();
}

}  // namespace knotpoly
