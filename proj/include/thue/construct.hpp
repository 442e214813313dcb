#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thue/colouring.hpp"
#include "thue/graph.hpp"
#include "thue/solver.hpp"

namespace thue {

// Constructive colourings. Every function runs the matching checker on its
// output before returning and throws ConstructionFailedError if it does not
// pass (which would signal an implementation bug, not an input condition).

// Weak total Thue colouring of P_n with 3 colours (2 for n <= 2): the
// square-free ternary word transported onto the subdivision of the path.
TotalColouring colour_path_weak(int n);

// Strong total Thue colouring of P_n (n >= 5 vertices) with at most 5
// colours. Internally pads the length to the next multiple of 4, colours by
// the six-step block scheme and restricts.
TotalColouring colour_path_total(int n);

// Strong total Thue colouring of C_n (n >= 4) with at most 6 colours. For n
// divisible by 4 the direct 5-colour wrap-around is attempted first; then a
// unique colour on one edge plus the path scheme on the rest; any candidate
// that fails validation falls through, ending with an exact search capped at
// 6 colours.
TotalColouring colour_cycle_total(int n, const Budget& budget = {});

// Strong total Thue colouring of K_{1,n} (n >= 3 leaves) with exactly n+1
// colours: rainbow edges, a fresh colour on the centre, and each leaf taking
// the colour of the cyclically next edge.
TotalColouring colour_star_total(int n);

// Weak total Thue colouring of a connected graph with at most m-n+5 colours:
// a 4-colour weak colouring of a spanning tree (exact search at k=4) plus
// fresh rainbow colours on the remaining edges.
TotalColouring colour_spanning_tree_bound(const Graph& g, const Budget& budget = {});

using BlockColourer = std::function<TotalColouring(const Graph&)>;

// Weak total Thue colouring of a connected graph via its bridge
// decomposition: a nonrepetitive edge colouring of the quotient tree (exact
// search, at most max(4*Delta(T)-4, 1) colours) plus a shared disjoint
// palette for the 2-edge-connected components. block_colourer must produce
// weak total Thue colourings of the component subgraphs; the default is the
// exact solver in weak-total mode.
TotalColouring colour_bridge_composition(const Graph& g, const BlockColourer& block_colourer = {},
                                         const Budget& budget = {});

// Weak total Thue colouring with n+1 colours: rainbow vertices plus one
// fresh colour on all edges.
TotalColouring rainbow_plus_one(const Graph& g);

// ---------------------------------------------------------------------------

struct BoundEntry {
    std::string parameter; // pi | pi_prime | pi_tw | pi_t
    bool is_upper;
    double value;
    std::string theorem;
    std::string note;
    bool assumption = false; // structural precondition asserted by the caller
};

struct BoundsReport {
    std::vector<BoundEntry> entries;
    std::vector<std::string> inconsistencies; // vs solved exact values
};

// Every applicable bound for g. faces is the face count of a plane embedding
// (user-supplied, not validated). When solved values are given, each
// non-assumption bound is consistency-checked against them.
BoundsReport bounds_report(const Graph& g, std::optional<int> faces = {},
                           const std::optional<ThueParameters>& solved = {},
                           const Budget& budget = {});

} // namespace thue
