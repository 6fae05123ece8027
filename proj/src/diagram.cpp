#include "knotpoly/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace knotpoly {

namespace {

const std::string kLoopGlyph = "○";  // ○

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

Diagram Diagram::unknot() {
    Diagram d;
    d.comps.push_back({});
    return d;
}

int Diagram::fresh_id() const {
    int m = 0;
    for (auto& [id, info] : crossings) m = std::max(m, id + 1);
    return m;
}

int Diagram::classical_count() const {
    int n = 0;
    for (auto& [id, info] : crossings)
        if (info.kind == CrossKind::Classical) ++n;
    return n;
}

int Diagram::node_count() const {
    int n = 0;
    for (auto& [id, info] : crossings)
        if (info.kind == CrossKind::Node) ++n;
    return n;
}

std::vector<int> Diagram::crossing_ids() const {
    std::vector<int> ids;
    for (auto& [id, info] : crossings) ids.push_back(id);
    return ids;
}

long Diagram::writhe() const {
    long w = 0;
    for (auto& [id, info] : crossings)
        if (info.kind == CrossKind::Classical) w += info.sign;
    return w;
}

void Diagram::validate() const {
    std::map<int, std::vector<PassRef>> seen;
    for (size_t c = 0; c < comps.size(); ++c)
        for (size_t i = 0; i < comps[c].size(); ++i)
            seen[comps[c][i].id].push_back({static_cast<int>(c), static_cast<int>(i)});
    for (auto& [id, refs] : seen) {
        auto it = crossings.find(id);
        if (it == crossings.end())
            throw ParseError("crossing " + std::to_string(id) + " referenced but not declared");
        if (refs.size() != 2)
            throw ParseError("crossing " + std::to_string(id) + " appears " +
                             std::to_string(refs.size()) + " times (expected 2)");
        if (it->second.kind == CrossKind::Classical) {
            StrandRole r1 = comps[refs[0].comp][refs[0].idx].role;
            StrandRole r2 = comps[refs[1].comp][refs[1].idx].role;
            if (r1 == r2)
                throw ParseError("crossing " + std::to_string(id) + " lacks " +
                                 (r1 == StrandRole::Over ? std::string("an undercrossing")
                                                         : std::string("an overcrossing")) +
                                 " occurrence");
        }
        if (it->second.sign != 1 && it->second.sign != -1)
            throw ParseError("crossing " + std::to_string(id) + " has invalid sign");
    }
    for (auto& [id, info] : crossings)
        if (!seen.count(id))
            throw ParseError("crossing " + std::to_string(id) + " declared but never used");
}

std::pair<PassRef, PassRef> Diagram::find_passes(int id) const {
    std::vector<PassRef> refs;
    for (size_t c = 0; c < comps.size(); ++c)
        for (size_t i = 0; i < comps[c].size(); ++i)
            if (comps[c][i].id == id) refs.push_back({static_cast<int>(c), static_cast<int>(i)});
    if (refs.size() != 2) throw std::invalid_argument("unknown crossing id");
    return {refs[0], refs[1]};
}

// ---- gauss parsing ------------------------------------------------------

Diagram Diagram::parse_gauss(const std::string& text) {
    Diagram d;
    std::map<std::string, int> label_to_id;
    std::map<int, int> sign_of;

    for (const std::string& comp_raw : split(text, ';')) {
        std::string comp = trim(comp_raw);
        std::vector<Pass> passes;
        if (comp.empty() || comp == kLoopGlyph || comp == "O" || comp == "0") {
            d.comps.push_back(passes);
            continue;
        }
        size_t i = 0;
        auto fail = [&](const std::string& msg) {
            throw ParseError(msg + " at '" + comp.substr(i, 10) + "'");
        };
        while (i < comp.size()) {
            while (i < comp.size() && (std::isspace(static_cast<unsigned char>(comp[i])) ||
                                       comp[i] == '(' || comp[i] == ')'))
                ++i;
            if (i >= comp.size()) break;
            char ou = comp[i];
            if (ou != 'o' && ou != 'u' && ou != 'O' && ou != 'U')
                fail("expected 'o' or 'u'");
            ++i;
            size_t j = i;
            while (j < comp.size() && std::isalnum(static_cast<unsigned char>(comp[j])) &&
                   comp[j] != 'o' && comp[j] != 'u')
                ++j;
            if (j == i) fail("expected crossing label");
            std::string label = comp.substr(i, j - i);
            i = j;
            if (i >= comp.size() || (comp[i] != '+' && comp[i] != '-')) fail("expected sign");
            int sign = comp[i] == '+' ? 1 : -1;
            ++i;

            auto [it, fresh] = label_to_id.emplace(label, static_cast<int>(label_to_id.size()));
            int id = it->second;
            if (fresh) {
                sign_of[id] = sign;
            } else if (sign_of.at(id) != sign) {
                throw ParseError("crossing " + label + " has inconsistent signs");
            }
            passes.push_back(
                Pass{id, (ou == 'o' || ou == 'O') ? StrandRole::Over : StrandRole::Under});
        }
        if (passes.empty()) fail("empty component");
        d.comps.push_back(std::move(passes));
    }
    for (auto& [id, sign] : sign_of) d.crossings[id] = CrossingInfo{sign, CrossKind::Classical};
    d.validate();
    return d;
}

std::string Diagram::to_gauss() const {
    Diagram dense = relabeled_dense();
    std::ostringstream os;
    for (size_t c = 0; c < dense.comps.size(); ++c) {
        if (c) os << ";";
        if (dense.comps[c].empty()) {
            os << kLoopGlyph;
            continue;
        }
        for (const Pass& p : dense.comps[c]) {
            const CrossingInfo& info = dense.crossings.at(p.id);
            os << "(" << (p.role == StrandRole::Over ? 'o' : 'u') << (p.id + 1)
               << (info.sign > 0 ? '+' : '-') << ")";
        }
    }
    return os.str();
}

Diagram Diagram::relabeled_dense() const {
    std::map<int, int> remap;
    Diagram d;
    d.pd = pd;
    for (auto& comp : comps) {
        std::vector<Pass> out;
        for (const Pass& p : comp) {
            auto [it, fresh] = remap.emplace(p.id, static_cast<int>(remap.size()));
            out.push_back(Pass{it->second, p.role});
        }
        d.comps.push_back(std::move(out));
    }
    for (auto& [id, info] : crossings) d.crossings[remap.at(id)] = info;
    return d;
}

// ---- PD parsing -----------------------------------------------------------

// Tuples are clockwise. For X[a,b,c,d]: a = incoming over edge, c = outgoing
// over edge, {b,d} the under strand; the crossing sign is +1 when the under
// strand runs d -> b. For V tuples the strands are (a,c) and (b,d) with no
// over/under meaning.
Diagram Diagram::parse_pd(const std::string& text) {
    struct RawTuple {
        bool virt;
        std::array<int, 4> e;
    };
    std::vector<RawTuple> tuples;
    {
        std::string norm = text;
        for (char& c : norm)
            if (c == '\n' || c == ';') c = ' ';
        size_t i = 0;
        while (i < norm.size()) {
            while (i < norm.size() && std::isspace(static_cast<unsigned char>(norm[i]))) ++i;
            if (i >= norm.size()) break;
            char kind = norm[i];
            if (kind != 'X' && kind != 'V')
                throw ParseError("expected 'X' or 'V' tuple at '" + norm.substr(i, 10) + "'");
            ++i;
            while (i < norm.size() && std::isspace(static_cast<unsigned char>(norm[i]))) ++i;
            if (i >= norm.size() || norm[i] != '[')
                throw ParseError("expected '[' after tuple kind");
            ++i;
            std::array<int, 4> e{};
            for (int k = 0; k < 4; ++k) {
                while (i < norm.size() &&
                       (std::isspace(static_cast<unsigned char>(norm[i])) || norm[i] == ','))
                    ++i;
                size_t j = i;
                while (j < norm.size() && std::isdigit(static_cast<unsigned char>(norm[j]))) ++j;
                if (j == i)
                    throw ParseError("malformed tuple: expected 4 edge labels at '" +
                                     norm.substr(i, 10) + "'");
                e[k] = std::stoi(norm.substr(i, j - i));
                i = j;
            }
            while (i < norm.size() && std::isspace(static_cast<unsigned char>(norm[i]))) ++i;
            if (i >= norm.size() || norm[i] != ']')
                throw ParseError("malformed tuple: expected ']' (tuples have 4 labels)");
            ++i;
            tuples.push_back(RawTuple{kind == 'V', e});
        }
    }
    if (tuples.empty()) throw ParseError("empty PD code");

    // Each tuple carries two strands, slots (0,2) and (1,3). X over strands
    // run slot0 -> slot2; every other strand direction comes from global
    // consistency: each edge label is "out" at one use and "in" at the other.
    struct Strand {
        int tuple;
        int in_slot, out_slot;
        int dir = 0;  // +1: low slot is the in end; -1: reversed; 0: unknown
    };
    std::vector<Strand> strands;
    std::map<int, std::vector<std::pair<int, int>>> edge_uses;  // edge -> (strand, end)
    for (size_t t = 0; t < tuples.size(); ++t) {
        for (int s = 0; s < 2; ++s) {
            Strand st;
            st.tuple = static_cast<int>(t);
            st.in_slot = s;
            st.out_slot = s + 2;
            int si = static_cast<int>(strands.size());
            strands.push_back(st);
            edge_uses[tuples[t].e[s]].push_back({si, 0});
            edge_uses[tuples[t].e[s + 2]].push_back({si, 1});
        }
    }
    for (auto& [label, uses] : edge_uses)
        if (uses.size() != 2)
            throw ParseError("edge label " + std::to_string(label) + " appears " +
                             std::to_string(uses.size()) + " times (expected 2)");

    for (size_t s = 0; s < strands.size(); ++s)
        if (!tuples[static_cast<size_t>(strands[s].tuple)].virt && strands[s].in_slot == 0)
            strands[s].dir = +1;

    auto use_is_in = [&](int si, int end) {
        return strands[static_cast<size_t>(si)].dir == +1 ? end == 0 : end == 1;
    };
    while (true) {
        bool progress = false;
        for (auto& [label, uses] : edge_uses) {
            auto [s1, e1] = uses[0];
            auto [s2, e2] = uses[1];
            int d1 = strands[static_cast<size_t>(s1)].dir;
            int d2 = strands[static_cast<size_t>(s2)].dir;
            if ((d1 != 0) == (d2 != 0)) continue;
            if (d1 == 0) {
                std::swap(s1, s2);
                std::swap(e1, e2);
            }
            bool want_in = !use_is_in(s1, e1);
            strands[static_cast<size_t>(s2)].dir = (want_in == (e2 == 0)) ? +1 : -1;
            progress = true;
        }
        if (!progress) {
            bool any = false;
            for (auto& st : strands)
                if (st.dir == 0) {
                    st.dir = +1;
                    any = true;
                    break;
                }
            if (!any) break;
        }
    }
    for (auto& [label, uses] : edge_uses) {
        bool in1 = use_is_in(uses[0].first, uses[0].second);
        bool in2 = use_is_in(uses[1].first, uses[1].second);
        if (in1 == in2)
            throw ParseError("PD circuits do not close at edge " + std::to_string(label));
    }

    std::map<int, int> strand_of_in_edge;
    for (size_t s = 0; s < strands.size(); ++s) {
        const Strand& st = strands[s];
        int in_edge = st.dir == +1 ? tuples[static_cast<size_t>(st.tuple)].e[st.in_slot]
                                   : tuples[static_cast<size_t>(st.tuple)].e[st.out_slot];
        if (strand_of_in_edge.count(in_edge))
            throw ParseError("PD circuits do not close at edge " + std::to_string(in_edge));
        strand_of_in_edge[in_edge] = static_cast<int>(s);
    }

    Diagram d;
    d.pd = PdData{};
    for (auto& t : tuples) d.pd->tuples.push_back(PdTuple{t.virt, t.e});
    std::vector<int> strand_comp(strands.size(), -1);
    std::vector<bool> visited(strands.size(), false);
    for (size_t s0 = 0; s0 < strands.size(); ++s0) {
        if (visited[s0]) continue;
        std::vector<Pass> comp;
        int comp_idx = static_cast<int>(d.comps.size());
        int s = static_cast<int>(s0);
        while (!visited[static_cast<size_t>(s)]) {
            visited[static_cast<size_t>(s)] = true;
            strand_comp[static_cast<size_t>(s)] = comp_idx;
            const Strand& st = strands[static_cast<size_t>(s)];
            if (!tuples[static_cast<size_t>(st.tuple)].virt) {
                bool is_over = st.in_slot == 0;
                comp.push_back(Pass{st.tuple, is_over ? StrandRole::Over : StrandRole::Under});
            }
            int out_edge = st.dir == +1 ? tuples[static_cast<size_t>(st.tuple)].e[st.out_slot]
                                        : tuples[static_cast<size_t>(st.tuple)].e[st.in_slot];
            auto next = strand_of_in_edge.find(out_edge);
            if (next == strand_of_in_edge.end())
                throw ParseError("PD circuits do not close at edge " + std::to_string(out_edge));
            s = next->second;
        }
        d.comps.push_back(std::move(comp));
    }

    for (size_t t = 0; t < tuples.size(); ++t) {
        if (tuples[t].virt) continue;
        const Strand& under = strands[2 * t + 1];
        int sign = (under.dir == -1) ? +1 : -1;  // dir -1 means in at slot 3 (= d)
        d.crossings[static_cast<int>(t)] = CrossingInfo{sign, CrossKind::Classical};
    }
    for (size_t t = 0; t < tuples.size(); ++t) {
        if (!tuples[t].virt) continue;
        d.pd->virtual_comps.push_back({strand_comp[2 * t], strand_comp[2 * t + 1]});
    }
    d.validate();
    return d;
}

std::string Diagram::to_pd() const {
    if (!pd) throw std::domain_error("pd serialization requires a diagram with planar edge data");
    std::ostringstream os;
    for (size_t t = 0; t < pd->tuples.size(); ++t) {
        if (t) os << " ";
        const PdTuple& tp = pd->tuples[t];
        os << (tp.virt ? 'V' : 'X') << "[" << tp.e[0] << "," << tp.e[1] << "," << tp.e[2] << ","
           << tp.e[3] << "]";
    }
    return os.str();
}

std::string Diagram::serialize(const std::string& format) const {
    if (format == "gauss") return to_gauss();
    if (format == "pd") return to_pd();
    throw std::invalid_argument("unknown serialization format: " + format);
}

int Diagram::flat_parity(int c1, int c2) const {
    if (!pd)
        throw std::domain_error("flat_parity requires extended PD input with virtual crossings");
    if (c1 == c2 || c1 < 0 || c2 < 0 || c1 >= static_cast<int>(comps.size()) ||
        c2 >= static_cast<int>(comps.size()))
        throw std::invalid_argument("flat_parity needs two distinct component indices");
    int count = 0;
    for (auto& [a, b] : pd->virtual_comps)
        if ((a == c1 && b == c2) || (a == c2 && b == c1)) ++count;
    return count % 2;
}

// ---- transforms -----------------------------------------------------------

Diagram Diagram::switched(int id) const {
    auto [p1, p2] = find_passes(id);
    Diagram d = *this;
    d.pd.reset();
    auto& info = d.crossings.at(id);
    if (info.kind != CrossKind::Classical)
        throw std::invalid_argument("switch needs a classical crossing");
    info.sign = -info.sign;
    auto flip = [](Pass& p) {
        p.role = p.role == StrandRole::Over ? StrandRole::Under : StrandRole::Over;
    };
    flip(d.comps[p1.comp][p1.idx]);
    flip(d.comps[p2.comp][p2.idx]);
    return d;
}

// Fig-55 virtualization at the Gauss level: the flanking virtual crossings
// leave the code alone, the crossing keeps its over/under roles (the quandle
// cannot see the change) and the reversed understrand flips the sign.
Diagram Diagram::virtualized(int id) const {
    Diagram d = *this;
    d.pd.reset();
    auto& info = d.crossings.at(id);
    if (info.kind != CrossKind::Classical)
        throw std::invalid_argument("virtualize needs a classical crossing");
    info.sign = -info.sign;
    return d;
}

Diagram Diagram::smoothed_oriented(int id) const {
    auto [p1, p2] = find_passes(id);
    Diagram d = *this;
    d.pd.reset();
    if (d.crossings.at(id).kind != CrossKind::Classical)
        throw std::invalid_argument("cannot smooth a node");
    d.crossings.erase(id);
    if (p1.comp == p2.comp) {
        const auto& comp = comps[p1.comp];
        int n = static_cast<int>(comp.size());
        int a = p1.idx, b = p2.idx;
        if (a > b) std::swap(a, b);
        std::vector<Pass> s1, s2;
        for (int i = a + 1; i < b; ++i) s1.push_back(comp[i]);
        for (int i = b + 1; i < n; ++i) s2.push_back(comp[i]);
        for (int i = 0; i < a; ++i) s2.push_back(comp[i]);
        d.comps[p1.comp] = s1;
        d.comps.push_back(s2);
    } else {
        const auto& c1 = comps[p1.comp];
        const auto& c2 = comps[p2.comp];
        std::vector<Pass> merged;
        int n1 = static_cast<int>(c1.size()), n2 = static_cast<int>(c2.size());
        for (int i = 1; i < n1; ++i) merged.push_back(c1[(p1.idx + i) % n1]);
        for (int i = 1; i < n2; ++i) merged.push_back(c2[(p2.idx + i) % n2]);
        d.comps[p1.comp] = merged;
        d.comps.erase(d.comps.begin() + p2.comp);
    }
    return d;
}

Diagram Diagram::with_node(int id) const {
    Diagram d = *this;
    d.pd.reset();
    auto& info = d.crossings.at(id);
    if (info.kind != CrossKind::Classical)
        throw std::invalid_argument("make_node needs a classical crossing");
    info.kind = CrossKind::Node;
    return d;
}

Diagram Diagram::with_crossing(int id, StrandRole role_of_first_pass, int sign) const {
    auto [p1, p2] = find_passes(id);
    Diagram d = *this;
    d.pd.reset();
    auto& info = d.crossings.at(id);
    info.kind = CrossKind::Classical;
    info.sign = sign;
    d.comps[p1.comp][p1.idx].role = role_of_first_pass;
    d.comps[p2.comp][p2.idx].role =
        role_of_first_pass == StrandRole::Over ? StrandRole::Under : StrandRole::Over;
    return d;
}

Diagram Diagram::mirrored() const {
    Diagram d = *this;
    d.pd.reset();
    for (auto& [id, info] : d.crossings) info.sign = -info.sign;
    for (auto& comp : d.comps)
        for (auto& p : comp)
            p.role = p.role == StrandRole::Over ? StrandRole::Under : StrandRole::Over;
    return d;
}

Diagram Diagram::reversed(int comp) const {
    if (comp < 0 || comp >= static_cast<int>(comps.size()))
        throw std::invalid_argument("bad component index");
    Diagram d = *this;
    d.pd.reset();
    std::reverse(d.comps[comp].begin(), d.comps[comp].end());
    std::map<int, int> count_in_comp;
    for (const Pass& p : d.comps[comp]) count_in_comp[p.id]++;
    for (auto& [id, cnt] : count_in_comp)
        if (cnt == 1) d.crossings.at(id).sign = -d.crossings.at(id).sign;
    return d;
}

Diagram Diagram::disjoint_union(const Diagram& a, const Diagram& b) {
    Diagram d = a.relabeled_dense();
    d.pd.reset();
    Diagram db = b.relabeled_dense();
    int off = static_cast<int>(d.crossings.size());
    for (auto& comp : db.comps) {
        std::vector<Pass> out;
        for (const Pass& p : comp) out.push_back(Pass{p.id + off, p.role});
        d.comps.push_back(std::move(out));
    }
    for (auto& [id, info] : db.crossings) d.crossings[id + off] = info;
    return d;
}

Diagram Diagram::connected_sum(const Diagram& a, const Diagram& b) {
    if (a.comps.size() != 1 || b.comps.size() != 1)
        throw std::invalid_argument("connected sum needs single-component diagrams");
    Diagram d = a.relabeled_dense();
    d.pd.reset();
    Diagram db = b.relabeled_dense();
    int off = static_cast<int>(d.crossings.size());
    for (const Pass& p : db.comps[0]) d.comps[0].push_back(Pass{p.id + off, p.role});
    for (auto& [id, info] : db.crossings) d.crossings[id + off] = info;
    return d;
}

std::string Diagram::canonical_code() const {
    size_t ncomp = comps.size();
    if (ncomp > 6) throw std::domain_error("canonical_code limited to 6 components");
    std::vector<int> order(ncomp);
    std::iota(order.begin(), order.end(), 0);
    std::string best;
    std::vector<int> rot(ncomp, 0);
    auto serialize_choice = [&](const std::vector<int>& ord, const std::vector<int>& rots) {
        std::map<int, int> remap;
        std::ostringstream os;
        for (size_t c = 0; c < ord.size(); ++c) {
            if (c) os << ";";
            const auto& comp = comps[static_cast<size_t>(ord[c])];
            if (comp.empty()) {
                os << kLoopGlyph;
                continue;
            }
            int n = static_cast<int>(comp.size());
            for (int i = 0; i < n; ++i) {
                const Pass& p = comp[static_cast<size_t>((i + rots[c]) % n)];
                auto [it, fresh] = remap.emplace(p.id, static_cast<int>(remap.size()));
                const CrossingInfo& info = crossings.at(p.id);
                os << "(" << (p.role == StrandRole::Over ? 'o' : 'u') << (it->second + 1)
                   << (info.kind == CrossKind::Node ? '*' : (info.sign > 0 ? '+' : '-')) << ")";
            }
        }
        return os.str();
    };
    do {
        std::fill(rot.begin(), rot.end(), 0);
        while (true) {
            std::string s = serialize_choice(order, rot);
            if (best.empty() || s < best) best = s;
            size_t k = 0;
            for (; k < ncomp; ++k) {
                size_t len = comps[static_cast<size_t>(order[k])].size();
                if (len == 0) continue;
                if (++rot[k] < static_cast<int>(len)) break;
                rot[k] = 0;
            }
            if (k == ncomp) break;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

Diagram Diagram::from_braid(const std::vector<int>& word, int strands) {
    if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
    std::vector<std::vector<Pass>> path(static_cast<size_t>(strands));
    std::vector<int> at(static_cast<size_t>(strands));
    std::iota(at.begin(), at.end(), 0);
    Diagram d;
    int next_id = 0;
    for (int g : word) {
        int k = std::abs(g);
        if (k < 1 || k >= strands) throw std::invalid_argument("braid generator out of range");
        int sl = at[static_cast<size_t>(k - 1)], sr = at[static_cast<size_t>(k)];
        int id = next_id++;
        int sign = g > 0 ? +1 : -1;
        // positive generator: the strand entering at position k goes over
        StrandRole left_role = g > 0 ? StrandRole::Over : StrandRole::Under;
        path[static_cast<size_t>(sl)].push_back(Pass{id, left_role});
        path[static_cast<size_t>(sr)].push_back(
            Pass{id, left_role == StrandRole::Over ? StrandRole::Under : StrandRole::Over});
        d.crossings[id] = CrossingInfo{sign, CrossKind::Classical};
        std::swap(at[static_cast<size_t>(k - 1)], at[static_cast<size_t>(k)]);
    }
    std::vector<int> next_strand(static_cast<size_t>(strands));
    for (int p = 0; p < strands; ++p)
        next_strand[static_cast<size_t>(at[static_cast<size_t>(p)])] = p;
    std::vector<bool> used(static_cast<size_t>(strands), false);
    for (int s0 = 0; s0 < strands; ++s0) {
        if (used[static_cast<size_t>(s0)]) continue;
        std::vector<Pass> comp;
        int s = s0;
        do {
            used[static_cast<size_t>(s)] = true;
            for (const Pass& p : path[static_cast<size_t>(s)]) comp.push_back(p);
            s = next_strand[static_cast<size_t>(s)];
        } while (s != s0);
        d.comps.push_back(std::move(comp));
    }
    d.validate();
    return d;
}

}  // namespace knotpoly
