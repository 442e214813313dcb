#pragma once

#include <optional>
#include <vector>

#include "thue/graph.hpp"
#include "thue/seq.hpp"

namespace thue {

constexpr Colour kNoColour = -1;

// Assignment of a colour to every vertex and every edge of a graph.
struct TotalColouring {
    std::vector<Colour> vertex_colours; // indexed by VertexId
    std::vector<Colour> edge_colours;   // indexed by EdgeId

    int colours_used() const;
};

enum class WitnessKind { VertexSeq, EdgeSeq, TotalSeq, ProperViolation };

const char* witness_kind_name(WitnessKind k);

// Certificate of a repetitive path (or a properness violation). For the
// sequence kinds, extracting the kind's colour sequence from `path` and
// running contains_square on it reproduces `square`. For ProperViolation the
// path is the minimal element run whose first and last elements clash, and
// square is the {0,1} square of that colour pair.
struct Witness {
    WitnessKind kind;
    ElementPath path;
    Square square;
};

bool reverify_witness(const Graph& g, const TotalColouring& c, const Witness& w);

// Colour sequence of an element path under a total colouring: alternating
// vertex and edge colours in path order.
ColourSequence total_sequence(const Graph& g, const TotalColouring& c, const ElementPath& p);

// The four validity checkers. Each returns the first witness in canonical
// path-enumeration order, or nullopt when the colouring is valid.
std::optional<Witness> is_proper_total(const Graph& g, const TotalColouring& c);
std::optional<Witness> is_nonrepetitive_vertex(const Graph& g,
                                               const std::vector<Colour>& vertex_colours);
std::optional<Witness> is_nonrepetitive_edge(const Graph& g,
                                             const std::vector<Colour>& edge_colours);
// Weak total Thue: the alternating colour sequence of every path (and every
// contiguous sub-run) is square-free. Properness is NOT required.
std::optional<Witness> is_weak_total_thue(const Graph& g, const TotalColouring& c);
// Strong total Thue: weak + nonrepetitive induced vertex- and edge-colourings
// (checked in that order; first failing witness returned).
std::optional<Witness> is_strong_total_thue(const Graph& g, const TotalColouring& c);

// ---------------------------------------------------------------------------
// shared engine

enum class Mode { Vertex, Edge, WeakTotal, StrongTotal };

const char* mode_name(Mode m);
std::optional<Mode> mode_from_name(const std::string& s);

// First square witness of the given sequence kind over paths with at most
// max_elements elements (unbounded when unset). vertex_colours/edge_colours
// may be empty for kinds that do not read them.
std::optional<Witness> find_square_witness(const Graph& g,
                                           const std::vector<Colour>& vertex_colours,
                                           const std::vector<Colour>& edge_colours,
                                           WitnessKind kind,
                                           std::optional<int> max_elements = {});

// Validity as a boolean, single path sweep (used by the brute-force oracle
// and construction validation, where only pass/fail matters).
bool passes(const Graph& g, const TotalColouring& c, Mode mode);

// Same check with the path list precomputed once, for callers that test many
// colourings of one graph. Paths are scanned shortest-first.
class PathChecker {
public:
    explicit PathChecker(const Graph& g);
    bool passes(const TotalColouring& c, Mode mode) const;

private:
    struct PathData {
        std::vector<VertexId> vs;
        std::vector<EdgeId> es;
    };
    std::vector<PathData> paths_;
};

// Capped variant for the resampling sampler; a pass here is NOT a validity
// guarantee (final acceptance always uses the full checkers above).
std::optional<Witness> find_violation_capped(const Graph& g, const TotalColouring& c, Mode mode,
                                             std::optional<int> max_elements);

// ---------------------------------------------------------------------------
// subdivision transport

// Weak total Thue colourings of g correspond 1-1 to vertex colourings of the
// subdivision: original vertices keep their colour, the subdivision vertex of
// edge e takes the edge's colour.
std::vector<Colour> to_subdivided_vertex_colours(const Subdivision& sd, const TotalColouring& c);
TotalColouring from_subdivided_vertex_colours(const Subdivision& sd,
                                              const std::vector<Colour>& vc);

} // namespace thue
