#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotpoly/laurent.hpp"

namespace knotpoly {

enum class StrandRole { Over, Under };
enum class CrossKind { Classical, Node };

struct Pass {
    int id;
    StrandRole role;

    bool operator==(const Pass& o) const { return id == o.id && role == o.role; }
};

struct CrossingInfo {
    int sign = +1;  // +1 or -1
    CrossKind kind = CrossKind::Classical;

    bool operator==(const CrossingInfo& o) const { return sign == o.sign && kind == o.kind; }
};

// Extended planar payload. Only diagrams read from PD input carry one; it is
// the sole place virtual crossings exist explicitly.
struct PdTuple {
    bool virt = false;
    std::array<int, 4> e{};  // clockwise edge labels, over-in first for X
};

struct PdData {
    std::vector<PdTuple> tuples;
    // for each virtual tuple (in order), the component indices of its strands
    std::vector<std::pair<int, int>> virtual_comps;
};

struct PassRef {
    int comp;
    int idx;
};

class ParseError : public std::invalid_argument {
  public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// An oriented link diagram as per-component circular Gauss sequences. Virtual
// crossings are not stored: the model is an arbitrary Gauss diagram.
class Diagram {
  public:
    std::vector<std::vector<Pass>> comps;
    std::map<int, CrossingInfo> crossings;
    std::optional<PdData> pd;

    static Diagram parse_gauss(const std::string& text);
    static Diagram parse_pd(const std::string& text);

    // One circular component with no crossings.
    static Diagram unknot();

    // Closure of a braid word on `strands` strands; entry +k / -k denotes
    // the positive / negative generator on positions (k, k+1), 1-based.
    static Diagram from_braid(const std::vector<int>& word, int strands);

    std::string to_gauss() const;
    std::string to_pd() const;
    std::string serialize(const std::string& format) const;

    void validate() const;

    int classical_count() const;
    int node_count() const;
    std::vector<int> crossing_ids() const;
    long writhe() const;

    // positions of the two passes of a crossing, in traversal order
    std::pair<PassRef, PassRef> find_passes(int id) const;

    Diagram switched(int id) const;
    Diagram virtualized(int id) const;       // v(i): sign flips, roles stay
    Diagram smoothed_oriented(int id) const;
    Diagram with_node(int id) const;
    Diagram with_crossing(int id, StrandRole role_of_first_pass, int sign) const;

    Diagram mirrored() const;
    Diagram reversed(int comp) const;

    Diagram relabeled_dense() const;

    static Diagram disjoint_union(const Diagram& a, const Diagram& b);
    static Diagram connected_sum(const Diagram& a, const Diagram& b);

    // parity of virtual crossings between two components (extended-PD input)
    int flat_parity(int c1, int c2) const;

    // canonical serialization up to rotation/relabeling (small diagrams)
    std::string canonical_code() const;

    bool same_up_to_relabel(const Diagram& o) const {
        return canonical_code() == o.canonical_code();
    }

    int fresh_id() const;
};

}  // namespace knotpoly
