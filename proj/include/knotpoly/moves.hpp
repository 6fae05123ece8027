#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "knotpoly/diagram.hpp"

namespace knotpoly {

enum class MoveKind { R1Del, R1Ins, R2Del, R2Ins, R3 };

struct MoveSite {
    MoveKind kind;
    std::vector<int> chords;  // R1Del: {id}; R2Del: {id1, id2}

    // insertion sites (gap g = before index g, cyclically)
    int comp1 = 0, gap1 = 0;
    int comp2 = 0, gap2 = 0;
    int sign = +1;
    bool over_first = true;   // R1Ins: over pass first; R2Ins: over pair at gap1
    bool same_order = false;  // R2Ins: under pair in the same relative order

    // R3 site: the three adjacent pass pairs, each given by the position of
    // its first pass (the second is the cyclic successor)
    std::array<PassRef, 3> tri{};
};

std::vector<MoveSite> enumerate_moves(const Diagram& d);
std::vector<MoveSite> enumerate_shrinking_moves(const Diagram& d);  // R1Del + R2Del only
std::vector<MoveSite> enumerate_r3_moves(const Diagram& d);

Diagram apply_move(const Diagram& d, const MoveSite& m);

// deterministic seeded walk through move space; result is move-equivalent
Diagram random_walk(const Diagram& d, int steps, uint32_t seed, int max_crossings = 12);

// applies crossing-decreasing moves (plus R3 when it enables one) until none
// apply or the budget runs out; never increases the crossing count
Diagram greedy_simplify(const Diagram& d, int budget = 1000);

// heuristic unknot detection: greedy simplification with seeded walk retries
bool reduces_to_unknot(const Diagram& d, uint32_t seed = 1, int attempts = 12);

}  // namespace knotpoly
