#pragma once

#include "knotpoly/diagram.hpp"
#include "knotpoly/laurent.hpp"

namespace knotpoly {

using BracketPoly = Laurent<Int>;

inline std::vector<Var> bracket_vars() { return {Var{"A", 1}}; }
inline std::vector<Var> jones_vars() { return {Var{"t", 4}}; }

// loop value d = -A^2 - A^-2
BracketPoly loop_value();

struct BracketOptions {
    int max_crossings = 20;
};

// Bracket state sum <K> = sum_S <K|S> d^{||S||-1}. Loop counting traces the
// doubled directed-arc structure, so disoriented smoothings that reverse
// traversal direction are handled exactly.
BracketPoly bracket(const Diagram& d, const BracketOptions& opt = {});

// f_K(A) = (-A^3)^{-w(K)} <K>
BracketPoly f_poly(const Diagram& d, const BracketOptions& opt = {});

// V_K(t) = f_K(t^{-1/4}), quarter exponents carried exactly
Laurent<Int> jones(const Diagram& d, const BracketOptions& opt = {});

// number of states (2^n), for reporting
long bracket_state_count(const Diagram& d);

struct SwitchingReport {
    int sign;  // sign of the crossing in d
    BracketPoly lhs, rhs;  // A<K+> - A^-1<K->  vs  (A^2 - A^-2)<K0>
    bool holds;
};

// checks A<K+> - A^-1<K-> = (A^2 - A^-2)<K0> with roles assigned by the
// local sign; K0 is the oriented smoothing.
SwitchingReport verify_switching(const Diagram& d, int id, const BracketOptions& opt = {});

struct ConnectedSumReport {
    BracketPoly lhs, rhs;  // <K1 # K2>  vs  <K1><K2>
    bool holds;
    Diagram sum;
};

ConnectedSumReport connected_sum_check(const Diagram& a, const Diagram& b,
                                       const BracketOptions& opt = {});

struct VirtReport {
    bool found = false;
    std::vector<int> subset;      // virtualized crossings
    Diagram result;
    Laurent<Int> jones_poly;      // of the result
    std::string message;
};

// Virt(K): search crossing subsets (ascending size) whose switch unknots the
// diagram per greedy simplification + seeded walks, then virtualize that
// subset. Heuristic unknot detection; failure is reported, not fatal.
VirtReport construct_virt(const Diagram& d, uint32_t seed = 1);

}  // namespace knotpoly
