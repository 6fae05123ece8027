#include "knotpoly/moves.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace knotpoly {

namespace {

struct AdjPair {
    PassRef first;   // position of the first pass
    int c_first, c_second;
};

// all cyclic adjacencies (i, i+1) with distinct crossings
std::vector<AdjPair> adjacent_pairs(const Diagram& d) {
    std::vector<AdjPair> out;
    for (size_t c = 0; c < d.comps.size(); ++c) {
        int n = static_cast<int>(d.comps[c].size());
        if (n < 2) continue;
        int limit = n;  // for n == 2 both orders are genuine adjacencies
        for (int i = 0; i < limit; ++i) {
            const Pass& p = d.comps[c][static_cast<size_t>(i)];
            const Pass& q = d.comps[c][static_cast<size_t>((i + 1) % n)];
            if (p.id == q.id) continue;
            out.push_back(AdjPair{{static_cast<int>(c), i}, p.id, q.id});
        }
    }
    return out;
}

const Pass& pass_at(const Diagram& d, PassRef r) {
    return d.comps[static_cast<size_t>(r.comp)][static_cast<size_t>(r.idx)];
}

PassRef succ(const Diagram& d, PassRef r) {
    int n = static_cast<int>(d.comps[static_cast<size_t>(r.comp)].size());
    return PassRef{r.comp, (r.idx + 1) % n};
}

bool classical(const Diagram& d, int id) {
    auto it = d.crossings.find(id);
    return it != d.crossings.end() && it->second.kind == CrossKind::Classical;
}

// ---- R3 validity ----------------------------------------------------------
//
// A triangle of chords x = (A,B), y = (A,C), z = (B,C) sits on three arcs
// carrying adjacent pass pairs. The move is the standard planar triangle
// flip; it exists exactly when the pass orders, crossing signs and
// over/under data admit a planar realization whose over/under tournament is
// transitive. In the reference planar triangle (all strands in their
// reference direction) each strand meets the other two in alphabetical
// order and all direction pairs are positively oriented; flipping a strand
// direction reverses its meeting order and the two determinant signs it
// takes part in, and the mirror triangle negates all three determinants.
struct Triangle {
    // pairs[0] on strand A (chords x,y), pairs[1] on B (x,z), pairs[2] on C (y,z)
    std::array<PassRef, 3> pairs;
    int x, y, z;  // chord ids
};

bool r3_valid(const Diagram& d, const Triangle& t) {
    auto role_on = [&](int chord, int pair_index) {
        const Pass& p1 = pass_at(d, t.pairs[static_cast<size_t>(pair_index)]);
        const Pass& p2 = pass_at(d, succ(d, t.pairs[static_cast<size_t>(pair_index)]));
        if (p1.id == chord) return p1.role;
        return p2.role;
    };
    auto first_chord = [&](int pair_index) {
        return pass_at(d, t.pairs[static_cast<size_t>(pair_index)]).id;
    };
    // epsilon: +1 when the strand meets its partners in alphabetical order
    int eA = first_chord(0) == t.x ? +1 : -1;  // x (to B) before y (to C)
    int eB = first_chord(1) == t.x ? +1 : -1;  // x (to A) before z (to C)
    int eC = first_chord(2) == t.y ? +1 : -1;  // y (to A) before z (to B)

    int sx = d.crossings.at(t.x).sign;
    int sy = d.crossings.at(t.y).sign;
    int sz = d.crossings.at(t.z).sign;
    bool xA_over = role_on(t.x, 0) == StrandRole::Over;  // A over B at x
    bool yA_over = role_on(t.y, 0) == StrandRole::Over;  // A over C at y
    bool zB_over = role_on(t.z, 1) == StrandRole::Over;  // B over C at z

    int dAB = sx * (xA_over ? +1 : -1);
    int dAC = sy * (yA_over ? +1 : -1);
    int dBC = sz * (zB_over ? +1 : -1);
    int r1 = dAB * eA * eB, r2 = dAC * eA * eC, r3 = dBC * eB * eC;
    if (!(r1 == r2 && r2 == r3)) return false;

    // over/under tournament must be transitive (a cyclic triangle cannot be
    // slid)
    int wins_a = (xA_over ? 1 : 0) + (yA_over ? 1 : 0);
    int wins_b = (xA_over ? 0 : 1) + (zB_over ? 1 : 0);
    int wins_c = (yA_over ? 0 : 1) + (zB_over ? 0 : 1);
    // cyclic iff everyone wins exactly once
    return !(wins_a == 1 && wins_b == 1 && wins_c == 1);
}

std::vector<Triangle> triangles(const Diagram& d) {
    std::vector<Triangle> out;
    auto pairs = adjacent_pairs(d);
    auto disjoint = [&](PassRef a, PassRef b) {
        PassRef a2 = succ(d, a), b2 = succ(d, b);
        auto same = [](PassRef p, PassRef q) { return p.comp == q.comp && p.idx == q.idx; };
        return !same(a, b) && !same(a, b2) && !same(a2, b) && !same(a2, b2);
    };
    for (size_t i = 0; i < pairs.size(); ++i) {
        for (size_t j = 0; j < pairs.size(); ++j) {
            if (i == j) continue;
            // pair i on strand A: chords {x, y}; pair j on B must share
            // exactly one chord with pair i (that chord is x), plus a new z
            std::set<int> si{pairs[i].c_first, pairs[i].c_second};
            std::set<int> sj{pairs[j].c_first, pairs[j].c_second};
            std::vector<int> shared;
            std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(),
                                  std::back_inserter(shared));
            if (shared.size() != 1) continue;
            int x = shared[0];
            int y = pairs[i].c_first == x ? pairs[i].c_second : pairs[i].c_first;
            int z = pairs[j].c_first == x ? pairs[j].c_second : pairs[j].c_first;
            if (y == z) continue;
            for (size_t k = 0; k < pairs.size(); ++k) {
                if (k == i || k == j) continue;
                std::set<int> sk{pairs[k].c_first, pairs[k].c_second};
                if (sk != std::set<int>{y, z}) continue;
                if (!disjoint(pairs[i].first, pairs[j].first) ||
                    !disjoint(pairs[i].first, pairs[k].first) ||
                    !disjoint(pairs[j].first, pairs[k].first))
                    continue;
                // avoid the same triangle in a different pair order: demand
                // i < j < k lexicographically on (comp, idx)
                auto key = [](PassRef r) { return std::pair<int, int>(r.comp, r.idx); };
                if (!(key(pairs[i].first) < key(pairs[j].first))) continue;
                // no constraint between j,k order; the roles differ (A,B,C)
                Triangle t;
                t.pairs = {pairs[i].first, pairs[j].first, pairs[k].first};
                t.x = x;
                t.y = y;
                t.z = z;
                if (!classical(d, x) || !classical(d, y) || !classical(d, z)) continue;
                if (r3_valid(d, t)) out.push_back(t);
            }
        }
    }
    return out;
}

MoveSite r3_site(const Triangle& t) {
    MoveSite m;
    m.kind = MoveKind::R3;
    m.chords = {t.x, t.y, t.z};
    m.tri = t.pairs;
    return m;
}

void erase_positions(Diagram& d, std::vector<PassRef> refs) {
    std::sort(refs.begin(), refs.end(), [](PassRef a, PassRef b) {
        return a.comp != b.comp ? a.comp < b.comp : a.idx > b.idx;
    });
    for (const PassRef& r : refs)
        d.comps[static_cast<size_t>(r.comp)].erase(d.comps[static_cast<size_t>(r.comp)].begin() +
                                                   r.idx);
}

}  // namespace

std::vector<MoveSite> enumerate_shrinking_moves(const Diagram& d) {
    std::vector<MoveSite> out;
    // R1 deletions: a chord with cyclically adjacent endpoints
    for (auto& [id, info] : d.crossings) {
        if (info.kind != CrossKind::Classical) continue;
        auto [p1, p2] = d.find_passes(id);
        if (p1.comp != p2.comp) continue;
        int n = static_cast<int>(d.comps[static_cast<size_t>(p1.comp)].size());
        int lo = std::min(p1.idx, p2.idx), hi = std::max(p1.idx, p2.idx);
        if (hi - lo == 1 || (lo == 0 && hi == n - 1)) {
            MoveSite m;
            m.kind = MoveKind::R1Del;
            m.chords = {id};
            out.push_back(m);
        }
    }
    // R2 deletions: over ends adjacent, under ends adjacent, opposite signs
    auto pairs = adjacent_pairs(d);
    std::set<std::pair<int, int>> seen;
    for (auto& po : pairs) {
        const Pass& a = pass_at(d, po.first);
        const Pass& b = pass_at(d, succ(d, po.first));
        if (a.role != StrandRole::Over || b.role != StrandRole::Over) continue;
        if (!classical(d, a.id) || !classical(d, b.id)) continue;
        if (d.crossings.at(a.id).sign == d.crossings.at(b.id).sign) continue;
        for (auto& pu : pairs) {
            const Pass& c = pass_at(d, pu.first);
            const Pass& e = pass_at(d, succ(d, pu.first));
            if (c.role != StrandRole::Under || e.role != StrandRole::Under) continue;
            if (!((c.id == a.id && e.id == b.id) || (c.id == b.id && e.id == a.id))) continue;
            auto key = std::minmax(a.id, b.id);
            if (seen.count({key.first, key.second})) continue;
            seen.insert({key.first, key.second});
            MoveSite m;
            m.kind = MoveKind::R2Del;
            m.chords = {a.id, b.id};
            out.push_back(m);
        }
    }
    return out;
}

std::vector<MoveSite> enumerate_r3_moves(const Diagram& d) {
    std::vector<MoveSite> out;
    for (const Triangle& t : triangles(d)) out.push_back(r3_site(t));
    return out;
}

std::vector<MoveSite> enumerate_moves(const Diagram& d) {
    std::vector<MoveSite> out = enumerate_shrinking_moves(d);
    for (const MoveSite& m : enumerate_r3_moves(d)) out.push_back(m);
    // insertions at every arc position, fresh labels
    for (size_t c = 0; c < d.comps.size(); ++c) {
        int n = static_cast<int>(d.comps[c].size());
        int gaps = std::max(1, n);
        for (int g = 0; g < gaps; ++g) {
            for (int sign : {+1, -1}) {
                for (bool of : {true, false}) {
                    MoveSite m;
                    m.kind = MoveKind::R1Ins;
                    m.comp1 = static_cast<int>(c);
                    m.gap1 = g;
                    m.sign = sign;
                    m.over_first = of;
                    out.push_back(m);
                }
            }
        }
    }
    // R2 insertions at pairs of arc positions
    for (size_t c1 = 0; c1 < d.comps.size(); ++c1) {
        int g1max = std::max(1, static_cast<int>(d.comps[c1].size()));
        for (int g1 = 0; g1 < g1max; ++g1) {
            for (size_t c2 = c1; c2 < d.comps.size(); ++c2) {
                int g2max = std::max(1, static_cast<int>(d.comps[c2].size()));
                for (int g2 = (c1 == c2 ? g1 : 0); g2 < g2max; ++g2) {
                    for (int sign : {+1, -1}) {
                        for (bool same : {true, false}) {
                            MoveSite m;
                            m.kind = MoveKind::R2Ins;
                            m.comp1 = static_cast<int>(c1);
                            m.gap1 = g1;
                            m.comp2 = static_cast<int>(c2);
                            m.gap2 = g2;
                            m.sign = sign;
                            m.same_order = same;
                            out.push_back(m);
                        }
                    }
                }
            }
        }
    }
    return out;
}

Diagram apply_move(const Diagram& d, const MoveSite& m) {
    Diagram r = d;
    r.pd.reset();
    switch (m.kind) {
        case MoveKind::R1Del: {
            int id = m.chords.at(0);
            auto [p1, p2] = d.find_passes(id);
            if (p1.comp != p2.comp) throw std::invalid_argument("stale R1 site");
            int n = static_cast<int>(d.comps[static_cast<size_t>(p1.comp)].size());
            int lo = std::min(p1.idx, p2.idx), hi = std::max(p1.idx, p2.idx);
            if (!(hi - lo == 1 || (lo == 0 && hi == n - 1)))
                throw std::invalid_argument("stale R1 site");
            erase_positions(r, {p1, p2});
            r.crossings.erase(id);
            return r;
        }
        case MoveKind::R2Del: {
            int id1 = m.chords.at(0), id2 = m.chords.at(1);
            // verify by re-enumeration
            bool ok = false;
            for (const MoveSite& s : enumerate_shrinking_moves(d))
                if (s.kind == MoveKind::R2Del &&
                    ((s.chords[0] == id1 && s.chords[1] == id2) ||
                     (s.chords[0] == id2 && s.chords[1] == id1)))
                    ok = true;
            if (!ok) throw std::invalid_argument("stale R2 site");
            auto [a1, a2] = d.find_passes(id1);
            auto [b1, b2] = d.find_passes(id2);
            erase_positions(r, {a1, a2, b1, b2});
            r.crossings.erase(id1);
            r.crossings.erase(id2);
            return r;
        }
        case MoveKind::R1Ins: {
            int id = r.fresh_id();
            auto& comp = r.comps.at(static_cast<size_t>(m.comp1));
            if (m.gap1 < 0 || m.gap1 > static_cast<int>(comp.size()))
                throw std::invalid_argument("bad insertion gap");
            Pass first{id, m.over_first ? StrandRole::Over : StrandRole::Under};
            Pass second{id, m.over_first ? StrandRole::Under : StrandRole::Over};
            comp.insert(comp.begin() + m.gap1, {first, second});
            r.crossings[id] = CrossingInfo{m.sign, CrossKind::Classical};
            return r;
        }
        case MoveKind::R2Ins: {
            int id1 = r.fresh_id();
            int id2 = id1 + 1;
            // insert the later gap first so indices stay valid
            struct Ins {
                int comp, gap;
                std::vector<Pass> passes;
            };
            std::vector<Pass> over_pair{{id1, StrandRole::Over}, {id2, StrandRole::Over}};
            std::vector<Pass> under_pair =
                m.same_order ? std::vector<Pass>{{id1, StrandRole::Under}, {id2, StrandRole::Under}}
                             : std::vector<Pass>{{id2, StrandRole::Under}, {id1, StrandRole::Under}};
            std::vector<Ins> ins{{m.comp1, m.gap1, over_pair}, {m.comp2, m.gap2, under_pair}};
            std::sort(ins.begin(), ins.end(), [](const Ins& a, const Ins& b) {
                return a.comp != b.comp ? a.comp > b.comp : a.gap > b.gap;
            });
            for (const Ins& x : ins) {
                auto& comp = r.comps.at(static_cast<size_t>(x.comp));
                if (x.gap < 0 || x.gap > static_cast<int>(comp.size()))
                    throw std::invalid_argument("bad insertion gap");
                comp.insert(comp.begin() + x.gap, x.passes.begin(), x.passes.end());
            }
            r.crossings[id1] = CrossingInfo{m.sign, CrossKind::Classical};
            r.crossings[id2] = CrossingInfo{-m.sign, CrossKind::Classical};
            return r;
        }
        case MoveKind::R3: {
            // verify the triangle is still there and valid
            bool ok = false;
            for (const MoveSite& s : enumerate_r3_moves(d)) {
                if (std::set<int>(s.chords.begin(), s.chords.end()) ==
                        std::set<int>(m.chords.begin(), m.chords.end()) &&
                    s.tri[0].comp == m.tri[0].comp && s.tri[0].idx == m.tri[0].idx &&
                    s.tri[1].comp == m.tri[1].comp && s.tri[1].idx == m.tri[1].idx &&
                    s.tri[2].comp == m.tri[2].comp && s.tri[2].idx == m.tri[2].idx)
                    ok = true;
            }
            if (!ok) throw std::invalid_argument("stale or inapplicable R3 site");
            for (const PassRef& p : m.tri) {
                PassRef q = succ(r, p);
                std::swap(r.comps[static_cast<size_t>(p.comp)][static_cast<size_t>(p.idx)],
                          r.comps[static_cast<size_t>(q.comp)][static_cast<size_t>(q.idx)]);
            }
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

Diagram random_walk(const Diagram& d, int steps, uint32_t seed, int max_crossings) {
    std::mt19937 rng(seed);
    Diagram cur = d;
    for (int s = 0; s < steps; ++s) {
        std::vector<MoveSite> sites;
        bool big = cur.classical_count() >= max_crossings;
        if (big) {
            sites = enumerate_shrinking_moves(cur);
            for (const MoveSite& m : enumerate_r3_moves(cur)) sites.push_back(m);
            if (sites.empty()) sites = enumerate_moves(cur);
        } else {
            sites = enumerate_moves(cur);
        }
        if (sites.empty()) break;
        const MoveSite& m = sites[rng() % sites.size()];
        cur = apply_move(cur, m);
    }
    return cur;
}

Diagram greedy_simplify(const Diagram& d, int budget) {
    Diagram cur = d;
    while (budget > 0) {
        auto shrink = enumerate_shrinking_moves(cur);
        if (!shrink.empty()) {
            cur = apply_move(cur, shrink.front());
            --budget;
            continue;
        }
        // try an R3 that unlocks a shrinking move
        bool advanced = false;
        for (const MoveSite& m : enumerate_r3_moves(cur)) {
            if (budget <= 0) break;
            Diagram t = apply_move(cur, m);
            --budget;
            if (!enumerate_shrinking_moves(t).empty()) {
                cur = t;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return cur;
}

bool reduces_to_unknot(const Diagram& d, uint32_t seed, int attempts) {
    if (d.comps.size() != 1) return false;
    Diagram s = greedy_simplify(d);
    if (s.classical_count() == 0 && s.comps.size() == 1) return true;
    for (int k = 0; k < attempts; ++k) {
        Diagram w = random_walk(s, 6 + 3 * k, seed + static_cast<uint32_t>(k));
        w = greedy_simplify(w);
        if (w.classical_count() == 0 && w.comps.size() == 1) return true;
        if (w.classical_count() < s.classical_count()) s = w;
    }
    return false;
}

}  // namespace knotpoly
