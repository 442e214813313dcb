#include "thue/graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "thue/rng.hpp"

namespace thue {

Graph::Graph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edge_list)
    : n_(vertex_count), edges_(std::move(edge_list)), adj_(vertex_count) {
    if (n_ < 0)
        throw InvalidGraphError("negative vertex count");
    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
        auto& [u, v] = edges_[e];
        if (u > v)
            std::swap(u, v);
        if (u < 0 || v >= n_)
            throw InvalidGraphError("edge endpoint out of range");
        if (u == v)
            throw InvalidGraphError("loop edge");
        if (!seen.insert({u, v}).second)
            throw InvalidGraphError("parallel edge");
        adj_[u].push_back({v, e});
        adj_[v].push_back({u, e});
    }
    for (auto& inc : adj_)
        std::sort(inc.begin(), inc.end(),
                  [](const Incidence& a, const Incidence& b) { return a.neighbour < b.neighbour; });
}

int Graph::max_degree() const {
    int d = 0;
    for (VertexId v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

std::optional<EdgeId> Graph::edge_between(VertexId u, VertexId v) const {
    for (const auto& inc : adj_[u])
        if (inc.neighbour == v)
            return inc.edge;
    return std::nullopt;
}

std::vector<std::vector<VertexId>> Graph::components() const {
    std::vector<std::vector<VertexId>> comps;
    std::vector<bool> seen(n_, false);
    for (VertexId s = 0; s < n_; ++s) {
        if (seen[s])
            continue;
        std::vector<VertexId> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto& inc : adj_[v])
                if (!seen[inc.neighbour]) {
                    seen[inc.neighbour] = true;
                    stack.push_back(inc.neighbour);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const {
    return n_ <= 1 || components().size() == 1;
}

// ---------------------------------------------------------------------------

ElementPath ElementPath::from_vertices(const Graph& g, const std::vector<VertexId>& vs) {
    ElementPath p;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) {
            auto e = g.edge_between(vs[i - 1], vs[i]);
            if (!e)
                throw InvalidGraphError("from_vertices: consecutive vertices not adjacent");
            p.elements.push_back({ElementKind::Edge, *e});
        }
        p.elements.push_back({ElementKind::Vertex, vs[i]});
    }
    return p;
}

ElementPath ElementPath::sub_run(int first, int last) const {
    ElementPath p;
    p.elements.assign(elements.begin() + first, elements.begin() + last + 1);
    return p;
}

bool is_valid_element_path(const Graph& g, const ElementPath& p) {
    const auto& el = p.elements;
    if (el.empty())
        return false;
    std::set<VertexId> used;
    std::set<EdgeId> used_edges;
    for (size_t i = 0; i < el.size(); ++i) {
        if (el[i].kind == ElementKind::Vertex) {
            if (el[i].id < 0 || el[i].id >= g.vertex_count())
                return false;
            if (!used.insert(el[i].id).second)
                return false;
        } else {
            if (el[i].id < 0 || el[i].id >= g.edge_count())
                return false;
            if (!used_edges.insert(el[i].id).second)
                return false;
        }
        if (i > 0) {
            if (el[i].kind == el[i - 1].kind)
                return false;
            const ElementRef& ve = el[i].kind == ElementKind::Vertex ? el[i] : el[i - 1];
            const ElementRef& ee = el[i].kind == ElementKind::Edge ? el[i] : el[i - 1];
            auto [a, b] = g.edge(ee.id);
            if (ve.id != a && ve.id != b)
                return false;
        }
    }
    // implicit endpoints of edge-first/edge-last runs are vertices too and
    // must not revisit any explicit or implicit vertex
    auto implicit_end = [&](size_t edge_pos, size_t vertex_pos) -> VertexId {
        auto [a, b] = g.edge(el[edge_pos].id);
        return el[vertex_pos].id == a ? b : a;
    };
    if (el.front().kind == ElementKind::Edge) {
        VertexId w = el.size() > 1 ? implicit_end(0, 1) : g.edge(el.front().id).first;
        if (!used.insert(w).second)
            return false;
    }
    if (el.size() > 1 && el.back().kind == ElementKind::Edge) {
        VertexId w = implicit_end(el.size() - 1, el.size() - 2);
        if (!used.insert(w).second)
            return false;
    }
    return true;
}

PathEnumerator::PathEnumerator(const Graph& g, std::optional<int> max_elements)
    : g_(g), on_path_(g.vertex_count(), false) {
    // 2k+1 elements for k edges
    max_edges_ = max_elements ? std::max(0, (*max_elements - 1) / 2) : g.vertex_count();
}

bool PathEnumerator::next() {
    const int n = g_.vertex_count();
    while (true) {
        if (!start_pushed_) {
            if (start_ >= n)
                return false;
            path_vertices_.assign(1, start_);
            path_edges_.clear();
            next_index_.assign(1, 0);
            std::fill(on_path_.begin(), on_path_.end(), false);
            on_path_[start_] = true;
            start_pushed_ = true;
        }
        while (!next_index_.empty()) {
            VertexId v = path_vertices_.back();
            const auto& inc = g_.incident(v);
            bool extended = false;
            for (int& idx = next_index_.back(); idx < static_cast<int>(inc.size());) {
                const auto [w, e] = inc[idx];
                ++idx;
                if (on_path_[w] || static_cast<int>(path_edges_.size()) + 1 > max_edges_)
                    continue;
                path_vertices_.push_back(w);
                path_edges_.push_back(e);
                on_path_[w] = true;
                next_index_.push_back(0);
                extended = true;
                break;
            }
            if (extended) {
                if (start_ < path_vertices_.back())
                    return true; // canonical orientation: emit once
                continue;
            }
            // exhausted this frame
            next_index_.pop_back();
            on_path_[path_vertices_.back()] = false;
            path_vertices_.pop_back();
            if (!path_edges_.empty())
                path_edges_.pop_back();
        }
        start_pushed_ = false;
        ++start_;
    }
}

ElementPath PathEnumerator::to_element_path() const {
    ElementPath p;
    for (size_t i = 0; i < path_vertices_.size(); ++i) {
        if (i > 0)
            p.elements.push_back({ElementKind::Edge, path_edges_[i - 1]});
        p.elements.push_back({ElementKind::Vertex, path_vertices_[i]});
    }
    return p;
}

std::vector<ElementPath> enumerate_paths(const Graph& g, std::optional<int> max_elements) {
    std::vector<ElementPath> out;
    PathEnumerator en(g, max_elements);
    while (en.next())
        out.push_back(en.to_element_path());
    return out;
}

// ---------------------------------------------------------------------------

Subdivision subdivide(const Graph& g) {
    const int n = g.vertex_count(), m = g.edge_count();
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(2 * m);
    for (EdgeId e = 0; e < m; ++e) {
        auto [u, v] = g.edge(e);
        edges.push_back({u, n + e});
        edges.push_back({n + e, v});
    }
    return {Graph(n + m, std::move(edges)), n, m};
}

Graph line_graph(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                edges.push_back({std::min(inc[i].edge, inc[j].edge),
                                 std::max(inc[i].edge, inc[j].edge)});
    }
    return Graph(g.edge_count(), std::move(edges));
}

std::vector<EdgeId> spanning_tree_edges(const Graph& g) {
    if (!g.is_connected())
        throw DisconnectedError("spanning_tree: graph is not connected");
    std::vector<EdgeId> tree;
    if (g.vertex_count() == 0)
        return tree;
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexId> queue{0};
    seen[0] = true;
    for (size_t h = 0; h < queue.size(); ++h) {
        VertexId v = queue[h];
        for (const auto& inc : g.incident(v))
            if (!seen[inc.neighbour]) {
                seen[inc.neighbour] = true;
                tree.push_back(inc.edge);
                queue.push_back(inc.neighbour);
            }
    }
    return tree;
}

Graph spanning_tree(const Graph& g) {
    return edge_subgraph(g, spanning_tree_edges(g));
}

Graph edge_subgraph(const Graph& g, const std::vector<EdgeId>& keep) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(keep.size());
    for (EdgeId e : keep)
        edges.push_back(g.edge(e));
    return Graph(g.vertex_count(), std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<VertexId>& vs) {
    InducedSubgraph out;
    out.vertex_of = vs;
    std::sort(out.vertex_of.begin(), out.vertex_of.end());
    std::vector<int> new_id(g.vertex_count(), -1);
    for (size_t i = 0; i < out.vertex_of.size(); ++i)
        new_id[out.vertex_of[i]] = static_cast<int>(i);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (new_id[u] >= 0 && new_id[v] >= 0) {
            edges.push_back({new_id[u], new_id[v]});
            out.edge_of.push_back(e);
        }
    }
    out.graph = Graph(static_cast<int>(out.vertex_of.size()), std::move(edges));
    return out;
}

BridgeDecomposition bridge_decomposition(const Graph& g) {
    if (!g.is_connected())
        throw DisconnectedError("bridge_decomposition: graph is not connected");
    const int n = g.vertex_count();
    BridgeDecomposition out;
    std::vector<bool> is_bridge(g.edge_count(), false);

    // iterative lowpoint DFS
    std::vector<int> disc(n, -1), low(n, 0);
    struct Frame {
        VertexId v;
        EdgeId via; // edge used to enter v, -1 at root
        size_t idx = 0;
    };
    int timer = 0;
    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        std::vector<Frame> stack{{root, -1}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident(f.v);
            if (f.idx < inc.size()) {
                auto [w, e] = inc[f.idx++];
                if (e == f.via)
                    continue;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                if (f.via != -1) {
                    auto [a, b] = g.edge(f.via);
                    VertexId parent = (a == f.v) ? b : a;
                    low[parent] = std::min(low[parent], low[f.v]);
                    if (low[f.v] > disc[parent])
                        is_bridge[f.via] = true;
                }
                stack.pop_back();
            }
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (is_bridge[e])
            out.bridges.push_back(e);

    // 2-edge-connected components: flood fill avoiding bridges
    out.component_of.assign(n, -1);
    for (VertexId s = 0; s < n; ++s) {
        if (out.component_of[s] != -1)
            continue;
        int id = static_cast<int>(out.components.size());
        std::vector<VertexId> comp, stack{s};
        out.component_of[s] = id;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto& inc : g.incident(v))
                if (!is_bridge[inc.edge] && out.component_of[inc.neighbour] == -1) {
                    out.component_of[inc.neighbour] = id;
                    stack.push_back(inc.neighbour);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }

    std::vector<std::pair<VertexId, VertexId>> tree_edges;
    for (EdgeId b : out.bridges) {
        auto [u, v] = g.edge(b);
        tree_edges.push_back({out.component_of[u], out.component_of[v]});
    }
    out.quotient_tree = Graph(static_cast<int>(out.components.size()), std::move(tree_edges));
    return out;
}

// ---------------------------------------------------------------------------

Graph make_path(int n) {
    if (n < 1)
        throw InvalidGraphError("make_path: need n >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3)
        throw InvalidGraphError("make_cycle: need n >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return Graph(n, std::move(edges));
}

Graph make_star(int n) {
    if (n < 1)
        throw InvalidGraphError("make_star: need n >= 1 leaves");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i <= n; ++i)
        edges.push_back({0, i});
    return Graph(n + 1, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1)
        throw InvalidGraphError("make_complete: need n >= 1");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

Graph make_diamond() {
    return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

Graph random_graph(int n, int max_degree, std::uint64_t seed) {
    using detail::uniform_below;
    if (n < 1)
        throw InvalidGraphError("random_graph: need n >= 1");
    if (max_degree < 0)
        throw InvalidGraphError("random_graph: negative degree cap");
    std::mt19937_64 rng(seed);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::set<std::pair<VertexId, VertexId>> present;
    auto try_add = [&](VertexId u, VertexId v) {
        if (u == v || deg[u] >= max_degree || deg[v] >= max_degree)
            return false;
        auto key = std::minmax(u, v);
        if (present.count({key.first, key.second}))
            return false;
        present.insert({key.first, key.second});
        edges.push_back({key.first, key.second});
        ++deg[u];
        ++deg[v];
        return true;
    };
    if (max_degree >= 2) {
        // random spanning tree: attach each vertex to an earlier one with capacity
        for (VertexId v = 1; v < n; ++v) {
            std::vector<VertexId> candidates;
            for (VertexId u = 0; u < v; ++u)
                if (deg[u] < max_degree)
                    candidates.push_back(u);
            VertexId u = candidates[uniform_below(rng, candidates.size())];
            try_add(u, v);
        }
    } else if (max_degree == 1 && n >= 2) {
        try_add(0, 1);
    }
    // sprinkle extra edges
    int attempts = n;
    for (int i = 0; i < attempts; ++i) {
        VertexId u = static_cast<VertexId>(uniform_below(rng, n));
        VertexId v = static_cast<VertexId>(uniform_below(rng, n));
        try_add(u, v);
    }
    return Graph(n, std::move(edges));
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        os << "  " << v << ";\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        os << "  " << g.edge(e).first << " -- " << g.edge(e).second
           << " [label=\"e" << e << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace thue
