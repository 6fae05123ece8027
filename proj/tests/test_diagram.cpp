#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotpoly/diagram.hpp"

using namespace knotpoly;

static const char* kTrefoil = "(o1+)(u2+)(o3+)(u1+)(o2+)(u3+)";
// spec-convention PD of the same trefoil, built by hand from its edge walk
static const char* kTrefoilPd = "X[6,4,1,3] X[4,2,5,1] X[2,6,3,5]";

static Diagram random_gauss(std::mt19937& rng, int chords, int comps_hint = 1) {
    // arbitrary Gauss diagrams are exactly the virtual diagrams
    int ncomp = std::max(1, comps_hint);
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

TEST_CASE("gauss parsing of the positive trefoil") {
    Diagram d = Diagram::parse_gauss(kTrefoil);
    CHECK(d.comps.size() == 1);
    CHECK(d.classical_count() == 3);
    CHECK(d.writhe() == 3);
    CHECK(d.to_gauss() == kTrefoil);
}

TEST_CASE("gauss parsing edge cases") {
    Diagram loop = Diagram::parse_gauss("");
    CHECK(loop.comps.size() == 1);
    CHECK(loop.classical_count() == 0);
    CHECK(loop.to_gauss() == "○");

    Diagram two = Diagram::parse_gauss("(o1+)(u1+);○");
    CHECK(two.comps.size() == 2);

    CHECK_THROWS_AS(Diagram::parse_gauss("(o1+)(o1+)"), ParseError);
    CHECK_THROWS_AS(Diagram::parse_gauss("(o1+)(u1-)"), ParseError);
    CHECK_THROWS_AS(Diagram::parse_gauss("(o1+)"), ParseError);
    CHECK_THROWS_AS(Diagram::parse_gauss("(o1+)(u2+)(u1+)"), ParseError);
    CHECK_THROWS_AS(Diagram::parse_gauss("(x1+)"), ParseError);
}

TEST_CASE("pd parsing reproduces the trefoil gauss code") {
    Diagram d = Diagram::parse_pd(kTrefoilPd);
    CHECK(d.comps.size() == 1);
    CHECK(d.writhe() == 3);
    Diagram g = Diagram::parse_gauss(kTrefoil);
    CHECK(d.same_up_to_relabel(g));
    // payload round-trip
    CHECK(Diagram::parse_pd(d.to_pd()).same_up_to_relabel(d));
}

TEST_CASE("pd curl convention") {
    // [1 2 2 1]: over in 1, over out 2; the under strand runs b->d, sign -1
    Diagram d = Diagram::parse_pd("X[1,2,2,1]");
    CHECK(d.comps.size() == 1);
    CHECK(d.classical_count() == 1);
    CHECK(d.writhe() == -1);
    Diagram m = Diagram::parse_pd("X[1,1,2,2]");
    CHECK(m.writhe() == 1);
}

TEST_CASE("pd error cases") {
    CHECK_THROWS_AS(Diagram::parse_pd("X[1,2,3]"), ParseError);
    CHECK_THROWS_AS(Diagram::parse_pd("X[1,2,2,3]"), ParseError);
}

TEST_CASE("virtual pd input and flat parity") {
    // the flat two-component link H: one flat crossing, one virtual crossing
    Diagram h = Diagram::parse_pd("X[2,3,1,4] V[1,3,2,4]");
    REQUIRE(h.comps.size() == 2);
    CHECK(h.flat_parity(0, 1) == 1);
    CHECK_THROWS_AS(h.flat_parity(0, 0), std::invalid_argument);

    // two components crossing virtually twice
    Diagram h2 = Diagram::parse_pd("V[1,3,2,4] V[2,4,1,3]");
    REQUIRE(h2.comps.size() == 2);
    CHECK(h2.flat_parity(0, 1) == 0);

    // a classical 2-component diagram has no virtual crossings
    Diagram hopf = Diagram::parse_gauss("(o1+)(u2+);(o2+)(u1+)");
    CHECK_THROWS_AS(hopf.flat_parity(0, 1), std::domain_error);
}

TEST_CASE("gauss round-trip on random diagrams") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Diagram d = random_gauss(rng, 1 + static_cast<int>(rng() % 6),
                                 1 + static_cast<int>(rng() % 2));
        Diagram back = Diagram::parse_gauss(d.to_gauss());
        CHECK(back.same_up_to_relabel(d));
    }
    // virtual trefoil round-trips
    Diagram vt = Diagram::parse_gauss("(o1+)(o2+)(u1+)(u2+)");
    CHECK(Diagram::parse_gauss(vt.to_gauss()).same_up_to_relabel(vt));
}

TEST_CASE("writhe properties") {
    Diagram tre = Diagram::parse_gauss(kTrefoil);
    CHECK(tre.writhe() == 3);
    CHECK(tre.mirrored().writhe() == -3);
    CHECK(Diagram::unknot().writhe() == 0);
    std::mt19937 rng(9);
    Diagram a = random_gauss(rng, 4), b = random_gauss(rng, 3);
    CHECK(Diagram::disjoint_union(a, b).writhe() == a.writhe() + b.writhe());
}

TEST_CASE("mirror is an involution") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Diagram d = random_gauss(rng, 5);
        CHECK(d.mirrored().mirrored().same_up_to_relabel(d));
    }
}

TEST_CASE("switch and virtualize") {
    Diagram tre = Diagram::parse_gauss(kTrefoil);
    Diagram sw = tre.switched(0);
    CHECK(sw.writhe() == 1);
    CHECK(sw.switched(0).same_up_to_relabel(tre));
    Diagram v = tre.virtualized(0);
    CHECK(v.classical_count() == 3);  // the crossing stays, its sign flips
    CHECK(v.writhe() == 1);
    CHECK(v.virtualized(0).same_up_to_relabel(tre));
    CHECK_THROWS_AS(tre.switched(99), std::invalid_argument);
}

TEST_CASE("oriented smoothing reconnects components") {
    Diagram tre = Diagram::parse_gauss(kTrefoil);
    Diagram sm = tre.smoothed_oriented(0);
    CHECK(sm.comps.size() == 2);
    CHECK(sm.classical_count() == 2);
    // smoothing a 1-crossing curl gives two loops
    Diagram curl = Diagram::parse_gauss("(o1+)(u1+)");
    Diagram two = curl.smoothed_oriented(0);
    CHECK(two.comps.size() == 2);
    CHECK(two.classical_count() == 0);
    CHECK_THROWS_AS(tre.with_node(0).smoothed_oriented(0), std::invalid_argument);
}

TEST_CASE("nodes") {
    Diagram tre = Diagram::parse_gauss(kTrefoil);
    Diagram g = tre.with_node(1);
    CHECK(g.node_count() == 1);
    CHECK(g.classical_count() == 2);
    CHECK(g.writhe() == 2);  // nodes carry no sign
}

TEST_CASE("braid closures") {
    Diagram tre = Diagram::from_braid({1, 1, 1}, 2);
    CHECK(tre.comps.size() == 1);
    CHECK(tre.writhe() == 3);
    CHECK(tre.same_up_to_relabel(Diagram::parse_gauss(kTrefoil)));

    Diagram hopf = Diagram::from_braid({1, 1}, 2);
    CHECK(hopf.comps.size() == 2);

    Diagram fig8 = Diagram::from_braid({1, -2, 1, -2}, 3);
    CHECK(fig8.comps.size() == 1);
    CHECK(fig8.writhe() == 0);
    CHECK(fig8.classical_count() == 4);
}

TEST_CASE("connected sum concatenates gauss codes") {
    Diagram tre = Diagram::parse_gauss(kTrefoil);
    Diagram s = Diagram::connected_sum(tre, tre);
    CHECK(s.comps.size() == 1);
    CHECK(s.classical_count() == 6);
    CHECK(s.writhe() == 6);
}
