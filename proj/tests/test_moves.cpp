#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotpoly/bracket.hpp"
#include "knotpoly/moves.hpp"

using namespace knotpoly;

static Diagram gauss(const std::string& s) { return Diagram::parse_gauss(s); }
static const char* kTrefoil = "(o1+)(u2+)(o3+)(u1+)(o2+)(u3+)";

static Diagram random_virtual(std::mt19937& rng, int chords, int ncomp = 1) {
    std::vector<std::vector<Pass>> comps(static_cast<size_t>(ncomp));
    std::vector<std::pair<int, StrandRole>> slots;
    for (int i = 0; i < chords; ++i) {
        slots.push_back({i, StrandRole::Over});
        slots.push_back({i, StrandRole::Under});
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    for (auto& [id, role] : slots)
        comps[rng() % static_cast<size_t>(ncomp)].push_back(Pass{id, role});
    Diagram d;
    d.comps = comps;
    for (int i = 0; i < chords; ++i)
        d.crossings[i] = CrossingInfo{rng() % 2 ? 1 : -1, CrossKind::Classical};
    d.validate();
    return d;
}

static int count_kind(const std::vector<MoveSite>& v, MoveKind k) {
    int n = 0;
    for (auto& m : v)
        if (m.kind == k) ++n;
    return n;
}

TEST_CASE("enumerate_moves basics") {
    Diagram tre = gauss(kTrefoil);
    auto sites = enumerate_moves(tre);
    CHECK(count_kind(sites, MoveKind::R1Del) == 0);
    CHECK(count_kind(sites, MoveKind::R2Del) == 0);

    Diagram curl = gauss("(o1+)(u1+)");
    CHECK(count_kind(enumerate_moves(curl), MoveKind::R1Del) == 1);

    Diagram loop = Diagram::unknot();
    auto loop_sites = enumerate_moves(loop);
    CHECK(count_kind(loop_sites, MoveKind::R1Del) == 0);
    CHECK(count_kind(loop_sites, MoveKind::R2Del) == 0);
    CHECK(count_kind(loop_sites, MoveKind::R3) == 0);
    CHECK(count_kind(loop_sites, MoveKind::R1Ins) > 0);
    CHECK(count_kind(loop_sites, MoveKind::R2Ins) > 0);
}

TEST_CASE("crossing-count deltas") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        Diagram d = random_virtual(rng, 1 + static_cast<int>(rng() % 5),
                                   1 + static_cast<int>(rng() % 2));
        for (const MoveSite& m : enumerate_moves(d)) {
            Diagram r = apply_move(d, m);
            int before = d.classical_count(), after = r.classical_count();
            switch (m.kind) {
                case MoveKind::R1Del: CHECK(after == before - 1); break;
                case MoveKind::R1Ins: CHECK(after == before + 1); break;
                case MoveKind::R2Del: CHECK(after == before - 2); break;
                case MoveKind::R2Ins: CHECK(after == before + 2); break;
                case MoveKind::R3: CHECK(after == before); break;
            }
        }
    }
}

TEST_CASE("R1 and R2 insert/delete are inverse at the created site") {
    Diagram tre = gauss(kTrefoil);
    MoveSite r1;
    r1.kind = MoveKind::R1Ins;
    r1.comp1 = 0;
    r1.gap1 = 2;
    r1.sign = -1;
    Diagram with_kink = apply_move(tre, r1);
    int new_id = 3;  // fresh label
    MoveSite del;
    del.kind = MoveKind::R1Del;
    del.chords = {new_id};
    CHECK(apply_move(with_kink, del).same_up_to_relabel(tre));

    MoveSite r2;
    r2.kind = MoveKind::R2Ins;
    r2.comp1 = 0;
    r2.gap1 = 1;
    r2.comp2 = 0;
    r2.gap2 = 4;
    r2.sign = +1;
    r2.same_order = false;
    Diagram poked = apply_move(tre, r2);
    CHECK(poked.classical_count() == 5);
    MoveSite del2;
    del2.kind = MoveKind::R2Del;
    del2.chords = {3, 4};
    CHECK(apply_move(poked, del2).same_up_to_relabel(tre));
}

TEST_CASE("every enumerated move preserves the bracket f-invariant") {
    std::mt19937 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 25; ++trial) {
        Diagram d = random_virtual(rng, 1 + static_cast<int>(rng() % 5),
                                   1 + static_cast<int>(rng() % 2));
        BracketPoly f0 = f_poly(d);
        for (const MoveSite& m : enumerate_moves(d)) {
            Diagram r = apply_move(d, m);
            CHECK(f_poly(r) == f0);
            ++checked;
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("random walks preserve f") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        Diagram d = random_virtual(rng, 1 + static_cast<int>(rng() % 5));
        BracketPoly f0 = f_poly(d);
        Diagram w = random_walk(d, 12, 1000 + static_cast<uint32_t>(trial));
        CHECK(f_poly(w) == f0);
    }
}

TEST_CASE("random walk determinism") {
    Diagram tre = gauss(kTrefoil);
    CHECK(random_walk(tre, 0, 42).same_up_to_relabel(tre));
    Diagram a = random_walk(tre, 10, 42);
    Diagram b = random_walk(tre, 10, 42);
    CHECK(a.to_gauss() == b.to_gauss());
}

TEST_CASE("greedy simplify") {
    CHECK(greedy_simplify(gauss("(o1+)(u1+)")).classical_count() == 0);
    // switched trefoil is an unknot diagram reachable by R2 then R1
    Diagram sw = gauss(kTrefoil).switched(0);
    Diagram s = greedy_simplify(sw);
    CHECK(s.classical_count() == 0);
    CHECK(s.comps.size() == 1);
    // never increases crossing count; idempotent
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        Diagram d = random_virtual(rng, 1 + static_cast<int>(rng() % 6));
        Diagram s1 = greedy_simplify(d);
        CHECK(s1.classical_count() <= d.classical_count());
        CHECK(greedy_simplify(s1).classical_count() == s1.classical_count());
    }
}

TEST_CASE("coil diagrams reduce to the crossingless loop") {
    // standard-unknot style coils: grown from the loop by R1/R2 insertions
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Diagram d = Diagram::unknot();
        for (int k = 0; k < 5; ++k) {
            auto sites = enumerate_moves(d);
            std::vector<MoveSite> ins;
            for (auto& m : sites)
                if (m.kind == MoveKind::R1Ins || m.kind == MoveKind::R2Ins) ins.push_back(m);
            d = apply_move(d, ins[rng() % ins.size()]);
        }
        CHECK(reduces_to_unknot(d, 99 + static_cast<uint32_t>(trial)));
    }
}

TEST_CASE("stale sites are rejected") {
    Diagram curl = gauss("(o1+)(u1+)");
    MoveSite del;
    del.kind = MoveKind::R1Del;
    del.chords = {0};
    Diagram done = apply_move(curl, del);
    CHECK_THROWS_AS(apply_move(done, del), std::invalid_argument);
}
