#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thue/errors.hpp"

namespace thue {

using VertexId = int;
using EdgeId = int;

// Simple undirected graph. Vertex ids are 0..n-1; edge ids are the index of
// the edge in construction order. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // endpoints normalised so that first < second
    std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    struct Incidence {
        VertexId neighbour;
        EdgeId edge;
    };
    // sorted by neighbour id
    const std::vector<Incidence>& incident(VertexId v) const { return adj_[v]; }

    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

    bool is_connected() const;
    // vertex sets of connected components, ordered by smallest member
    std::vector<std::vector<VertexId>> components() const;

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<Incidence>> adj_;
};

// ---------------------------------------------------------------------------
// element paths

enum class ElementKind : std::uint8_t { Vertex, Edge };

struct ElementRef {
    ElementKind kind;
    int id;

    friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

// Alternating run of vertices and edges: v0,e1,v1,...,ek,vk or any contiguous
// sub-run of one (may start or end at an edge).
struct ElementPath {
    std::vector<ElementRef> elements;

    static ElementPath from_vertices(const Graph& g, const std::vector<VertexId>& vs);
    ElementPath sub_run(int first, int last) const; // inclusive indices
};

// consecutive elements incident, alternation respected, vertices distinct
bool is_valid_element_path(const Graph& g, const ElementPath& p);

// Streams every simple path of g (>= 1 edge) exactly once, as a maximal
// vertex-to-vertex element run, in a fixed canonical order: DFS from each
// start vertex ascending, neighbours ascending, a path emitted iff its first
// endpoint id is smaller than its last. With max_elements set, only paths
// with at most that many elements (2k+1 for k edges) are produced.
class PathEnumerator {
public:
    explicit PathEnumerator(const Graph& g, std::optional<int> max_elements = {});

    bool next(); // advance; false when exhausted
    const std::vector<VertexId>& vertices() const { return path_vertices_; }
    const std::vector<EdgeId>& edges() const { return path_edges_; }
    ElementPath to_element_path() const;

private:
    const Graph& g_;
    int max_edges_;
    VertexId start_ = 0;
    bool start_pushed_ = false;
    std::vector<VertexId> path_vertices_;
    std::vector<EdgeId> path_edges_;
    std::vector<int> next_index_; // per stack frame: next incidence to try
    std::vector<bool> on_path_;
};

std::vector<ElementPath> enumerate_paths(const Graph& g, std::optional<int> max_elements = {});

// ---------------------------------------------------------------------------
// transformations

// Subdivision: every edge uv replaced by u - x_e - v with a fresh vertex x_e.
// Original vertices keep their ids; the subdivision vertex of edge e is
// original_vertex_count + e.
struct Subdivision {
    Graph graph;
    int original_vertex_count = 0;
    int original_edge_count = 0;

    VertexId vertex_image(VertexId v) const { return v; }
    VertexId edge_image(EdgeId e) const { return original_vertex_count + e; }
};

Subdivision subdivide(const Graph& g);

// Line graph: vertex e of the result is edge e of g; adjacency = incidence.
Graph line_graph(const Graph& g);

// Deterministic spanning tree (BFS from vertex 0, neighbours ascending).
// Throws DisconnectedError.
std::vector<EdgeId> spanning_tree_edges(const Graph& g);
Graph spanning_tree(const Graph& g);

// Subgraph on the same vertex set keeping only the listed edges; new edge id
// = position in the list.
Graph edge_subgraph(const Graph& g, const std::vector<EdgeId>& keep);

// Induced subgraph on a vertex subset, with dense relabelling.
struct InducedSubgraph {
    Graph graph;
    std::vector<VertexId> vertex_of;  // new id -> old id
    std::vector<EdgeId> edge_of;      // new edge id -> old edge id
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& vs);

struct BridgeDecomposition {
    std::vector<EdgeId> bridges;                 // ascending edge id
    std::vector<std::vector<VertexId>> components; // 2-edge-connected components
    std::vector<int> component_of;               // vertex -> component index
    Graph quotient_tree;                         // edge i of the tree = bridges[i]
};

// Standard lowpoint bridge finding; components ordered by smallest vertex.
// Throws DisconnectedError.
BridgeDecomposition bridge_decomposition(const Graph& g);

// ---------------------------------------------------------------------------
// generators

Graph make_path(int n);     // n >= 1 vertices; edge i joins i and i+1
Graph make_cycle(int n);    // n >= 3; edge i joins i and (i+1) mod n
Graph make_star(int n);     // K_{1,n}, centre 0, edge i joins 0 and i+1
Graph make_complete(int n); // n >= 1
Graph make_diamond();       // K_4 minus one edge

// Seed-deterministic simple graph respecting the degree cap; connected
// whenever max_degree >= 2 (random tree plus extra edges).
Graph random_graph(int n, int max_degree, std::uint64_t seed);

std::string to_dot(const Graph& g);

} // namespace thue
