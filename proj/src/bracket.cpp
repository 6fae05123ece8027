#include "knotpoly/bracket.hpp"

#include <cstdint>

#include "knotpoly/moves.hpp"

namespace knotpoly {

BracketPoly loop_value() {
    BracketPoly d(bracket_vars());
    d.add_term({2}, Int(-1));
    d.add_term({-2}, Int(-1));
    return d;
}

long bracket_state_count(const Diagram& d) {
    return 1L << d.classical_count();
}

namespace {

// Slot-pairing loop counter. Each pass owns two slots (in, out); arcs pair
// (pass.out, next.in); a smoothing pairs the four slots at its crossing. The
// smoothed curve's loops are the cycles of the union of both pairings.
struct StateCounter {
    // per crossing: slot ids of (p1.in, p1.out, p2.in, p2.out)
    std::vector<std::array<int, 4>> cross_slots;
    std::vector<int> arc_pair;   // slot -> slot via arcs
    std::vector<int> signs;      // per crossing
    int free_loops = 0;          // crossingless components
    int nslots = 0;

    std::vector<int> next;  // scratch: pairing by current state
    std::vector<bool> seen;

    explicit StateCounter(const Diagram& d) {
        std::map<int, int> cross_index;
        std::vector<int> ids;
        for (auto& [id, info] : d.crossings) {
            if (info.kind != CrossKind::Classical)
                throw std::domain_error("bracket undefined with node crossings present");
            cross_index[id] = static_cast<int>(ids.size());
            ids.push_back(id);
        }
        cross_slots.assign(ids.size(), {-1, -1, -1, -1});
        signs.resize(ids.size());
        for (size_t i = 0; i < ids.size(); ++i) signs[i] = d.crossings.at(ids[i]).sign;

        // slot layout: pass k gets slots 2k (in), 2k+1 (out)
        int pass_count = 0;
        for (auto& comp : d.comps) pass_count += static_cast<int>(comp.size());
        nslots = 2 * pass_count;
        arc_pair.assign(static_cast<size_t>(nslots), -1);
        int k = 0;
        for (auto& comp : d.comps) {
            if (comp.empty()) {
                ++free_loops;
                continue;
            }
            int first = k;
            int n = static_cast<int>(comp.size());
            for (int i = 0; i < n; ++i, ++k) {
                int ci = cross_index.at(comp[static_cast<size_t>(i)].id);
                auto& cs = cross_slots[static_cast<size_t>(ci)];
                if (cs[0] < 0) {
                    cs[0] = 2 * k;
                    cs[1] = 2 * k + 1;
                } else {
                    cs[2] = 2 * k;
                    cs[3] = 2 * k + 1;
                }
                int next_in = (i + 1 < n) ? 2 * (k + 1) : 2 * first;
                arc_pair[static_cast<size_t>(2 * k + 1)] = next_in;
                arc_pair[static_cast<size_t>(next_in)] = 2 * k + 1;
            }
        }
        next.assign(static_cast<size_t>(nslots), -1);
        seen.assign(static_cast<size_t>(nslots), false);
    }

    int crossings() const { return static_cast<int>(cross_slots.size()); }

    // state bit b=0: oriented smoothing (in1-out2, in2-out1);
    // b=1: disoriented (in1-in2, out1-out2)
    int loops(uint32_t state) {
        for (size_t c = 0; c < cross_slots.size(); ++c) {
            auto& cs = cross_slots[c];
            if ((state >> c) & 1u) {
                next[static_cast<size_t>(cs[0])] = cs[2];
                next[static_cast<size_t>(cs[2])] = cs[0];
                next[static_cast<size_t>(cs[1])] = cs[3];
                next[static_cast<size_t>(cs[3])] = cs[1];
            } else {
                next[static_cast<size_t>(cs[0])] = cs[3];
                next[static_cast<size_t>(cs[3])] = cs[0];
                next[static_cast<size_t>(cs[1])] = cs[2];
                next[static_cast<size_t>(cs[2])] = cs[1];
            }
        }
        std::fill(seen.begin(), seen.end(), false);
        int loops = free_loops;
        for (int s = 0; s < nslots; ++s) {
            if (seen[static_cast<size_t>(s)]) continue;
            ++loops;
            int x = s;
            while (!seen[static_cast<size_t>(x)]) {
                seen[static_cast<size_t>(x)] = true;
                int y = next[static_cast<size_t>(x)];
                seen[static_cast<size_t>(y)] = true;
                x = arc_pair[static_cast<size_t>(y)];
            }
        }
        return loops;
    }
};

}  // namespace

BracketPoly bracket(const Diagram& d, const BracketOptions& opt) {
    d.validate();
    StateCounter sc(d);
    int n = sc.crossings();
    if (n > opt.max_crossings)
        throw std::domain_error("state sum rejected: " + std::to_string(n) + " crossings exceed " +
                                std::to_string(opt.max_crossings) + " (raise max_crossings)");
    // A-smoothing is the oriented one exactly at positive crossings; tally
    // states by (net A exponent, loop count) and expand at the end.
    int maxloops = 0;
    for (auto& comp : d.comps) maxloops += std::max<int>(1, static_cast<int>(comp.size()));
    std::vector<std::vector<long>> tally(static_cast<size_t>(2 * n + 1),
                                         std::vector<long>(static_cast<size_t>(maxloops + 1), 0));
    for (uint32_t state = 0; state < (1u << n); ++state) {
        int apow = 0;
        for (int c = 0; c < n; ++c) {
            bool dis = (state >> c) & 1u;
            bool a_smoothing = dis == (sc.signs[static_cast<size_t>(c)] < 0);
            apow += a_smoothing ? 1 : -1;
        }
        int l = sc.loops(state);
        tally[static_cast<size_t>(apow + n)][static_cast<size_t>(l)] += 1;
    }
    BracketPoly result(bracket_vars());
    BracketPoly dpow = BracketPoly::constant(bracket_vars(), Int(1));
    std::vector<BracketPoly> dpows;
    dpows.push_back(dpow);
    for (int l = 1; l <= maxloops; ++l) {
        dpow = dpow * loop_value();
        dpows.push_back(dpow);
    }
    for (int a = -n; a <= n; ++a) {
        for (int l = 1; l <= maxloops; ++l) {
            long cnt = tally[static_cast<size_t>(a + n)][static_cast<size_t>(l)];
            if (!cnt) continue;
            BracketPoly term = dpows[static_cast<size_t>(l - 1)] *
                               BracketPoly::monomial(bracket_vars(), "A", a, Int(cnt));
            result += term;
        }
    }
    return result;
}

BracketPoly f_poly(const Diagram& d, const BracketOptions& opt) {
    BracketPoly b = bracket(d, opt);
    long w = d.writhe();
    // (-A^3)^{-w}
    BracketPoly norm = BracketPoly::monomial(bracket_vars(), "A", static_cast<int>(-3 * w),
                                             Int(w % 2 == 0 ? 1 : -1));
    return b * norm;
}

Laurent<Int> jones(const Diagram& d, const BracketOptions& opt) {
    return f_poly(d, opt).substitute_one("A", false, "t", -1, 4);
}

SwitchingReport verify_switching(const Diagram& d, int id, const BracketOptions& opt) {
    const CrossingInfo& info = d.crossings.at(id);
    if (info.kind != CrossKind::Classical)
        throw std::invalid_argument("verify_switching needs a classical crossing");
    Diagram plus = info.sign > 0 ? d : d.switched(id);
    Diagram minus = info.sign > 0 ? d.switched(id) : d;
    Diagram zero = d.smoothed_oriented(id);
    BracketPoly A = BracketPoly::monomial(bracket_vars(), "A", 1);
    BracketPoly Ainv = BracketPoly::monomial(bracket_vars(), "A", -1);
    BracketPoly lhs = A * bracket(plus, opt) - Ainv * bracket(minus, opt);
    BracketPoly factor = BracketPoly::monomial(bracket_vars(), "A", 2) -
                         BracketPoly::monomial(bracket_vars(), "A", -2);
    BracketPoly rhs = factor * bracket(zero, opt);
    return SwitchingReport{info.sign, lhs, rhs, lhs == rhs};
}

ConnectedSumReport connected_sum_check(const Diagram& a, const Diagram& b,
                                       const BracketOptions& opt) {
    Diagram s = Diagram::connected_sum(a, b);
    BracketPoly lhs = bracket(s, opt);
    BracketPoly rhs = bracket(a, opt) * bracket(b, opt);
    return ConnectedSumReport{lhs, rhs, lhs == rhs, s};
}

VirtReport construct_virt(const Diagram& d, uint32_t seed) {
    VirtReport rep;
    if (d.comps.size() != 1) throw std::invalid_argument("construct_virt needs a knot diagram");
    if (d.classical_count() > 12)
        throw std::domain_error("construct_virt limited to 12 crossings");
    std::vector<int> ids = d.crossing_ids();
    int n = static_cast<int>(ids.size());
    BracketPoly one = BracketPoly::constant(bracket_vars(), Int(1));

    // subsets in ascending popcount order
    std::vector<uint32_t> subsets;
    for (uint32_t m = 0; m < (1u << n); ++m) subsets.push_back(m);
    std::sort(subsets.begin(), subsets.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (uint32_t m : subsets) {
        Diagram sw = d;
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1u) sw = sw.switched(ids[static_cast<size_t>(i)]);
        if (f_poly(sw) != one) continue;
        if (!reduces_to_unknot(sw, seed)) continue;
        Diagram v = d;
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1u) v = v.virtualized(ids[static_cast<size_t>(i)]);
        rep.found = true;
        for (int i = 0; i < n; ++i)
            if ((m >> i) & 1u) rep.subset.push_back(ids[static_cast<size_t>(i)]);
        rep.result = v;
        rep.jones_poly = jones(v);
        rep.message = rep.subset.empty() ? "input already unknotted; returned unchanged"
                                         : "virtualized unknotting subset";
        return rep;
    }
    rep.message = "no unknotting subset found within budget (heuristic unknot detection)";
    rep.result = d;
    return rep;
}

}  // namespace knotpoly
