#include "thue/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

namespace thue {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetHit {};

struct BudgetCtx {
    long long nodes = 0;
    long long max_nodes;
    Clock::time_point deadline;
    int current_lower = 0; // progress for Exhausted reporting

    explicit BudgetCtx(const Budget& b)
        : max_nodes(b.max_nodes), deadline(Clock::now() + std::chrono::milliseconds(b.max_millis)) {}

    void tick() {
        if (++nodes > max_nodes)
            throw BudgetHit{};
        if ((nodes & 0x1fff) == 0 && Clock::now() > deadline)
            throw BudgetHit{};
    }
};

struct PathData {
    std::vector<VertexId> vs;
    std::vector<EdgeId> es;
};

// Backtracking search for one graph and one native mode (Vertex, Edge or
// StrongTotal; WeakTotal is solved as Vertex on the subdivision). On
// assigning an element only squares whose occurrence involves that element
// can newly become fully coloured, and each such square spans the whole
// sequence of its minimal enclosing path, so the incremental check walks the
// precomputed paths through the element and tests whole-sequence squares
// (end-trimmed spans for the alternating sequence).
struct Searcher {
    const Graph& g;
    Mode mode;
    BudgetCtx& ctx;

    std::vector<PathData> paths;
    std::vector<std::vector<int>> through_vertex, through_edge;
    std::vector<Colour> vcol, ecol;

    struct Elem {
        ElementKind kind;
        int id;
    };
    std::vector<Elem> order;
    int k = 0;

    Searcher(const Graph& graph, Mode m, BudgetCtx& c) : g(graph), mode(m), ctx(c) {
        PathEnumerator en(g);
        while (en.next())
            paths.push_back({en.vertices(), en.edges()});

        const bool use_vertices = mode != Mode::Edge;
        const bool use_edges = mode != Mode::Vertex;
        if (use_vertices) {
            through_vertex.resize(g.vertex_count());
            for (size_t i = 0; i < paths.size(); ++i)
                for (VertexId v : paths[i].vs)
                    through_vertex[v].push_back(static_cast<int>(i));
        }
        if (use_edges) {
            through_edge.resize(g.edge_count());
            for (size_t i = 0; i < paths.size(); ++i)
                for (EdgeId e : paths[i].es)
                    through_edge[e].push_back(static_cast<int>(i));
        }

        if (use_vertices)
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                order.push_back({ElementKind::Vertex, v});
        if (use_edges)
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                order.push_back({ElementKind::Edge, e});
        auto elem_degree = [&](const Elem& x) {
            if (x.kind == ElementKind::Vertex)
                return g.degree(x.id);
            auto [u, v] = g.edge(x.id);
            return g.degree(u) + g.degree(v) - 2;
        };
        auto global_id = [&](const Elem& x) {
            return x.kind == ElementKind::Vertex ? x.id : g.vertex_count() + x.id;
        };
        std::stable_sort(order.begin(), order.end(), [&](const Elem& a, const Elem& b) {
            int da = elem_degree(a), db = elem_degree(b);
            if (da != db)
                return da > db;
            return global_id(a) < global_id(b);
        });
    }

    bool whole_vertex_square(const PathData& p) const {
        size_t len = p.vs.size();
        if (len % 2 != 0)
            return false;
        size_t h = len / 2;
        for (size_t i = 0; i < h; ++i) {
            Colour a = vcol[p.vs[i]], b = vcol[p.vs[i + h]];
            if (a < 0 || a != b)
                return false;
        }
        return true;
    }

    bool whole_edge_square(const PathData& p) const {
        size_t len = p.es.size();
        if (len % 2 != 0)
            return false;
        size_t h = len / 2;
        for (size_t i = 0; i < h; ++i) {
            Colour a = ecol[p.es[i]], b = ecol[p.es[i + h]];
            if (a < 0 || a != b)
                return false;
        }
        return true;
    }

    bool end_trimmed_total_square(const PathData& p) const {
        size_t ke = p.es.size();
        auto col = [&](size_t pos) {
            return pos % 2 == 0 ? vcol[p.vs[pos / 2]] : ecol[p.es[pos / 2]];
        };
        for (size_t a = 0; a <= 1; ++a) {
            bool ok = true;
            for (size_t i = 0; i < ke && ok; ++i) {
                Colour c1 = col(a + i), c2 = col(a + ke + i);
                ok = c1 >= 0 && c1 == c2;
            }
            if (ok)
                return true;
        }
        return false;
    }

    bool creates_square(const Elem& x) const {
        if (x.kind == ElementKind::Vertex) {
            for (int pid : through_vertex[x.id]) {
                const PathData& p = paths[pid];
                if (whole_vertex_square(p))
                    return true;
                if (mode == Mode::StrongTotal && end_trimmed_total_square(p))
                    return true;
            }
        } else {
            for (int pid : through_edge[x.id]) {
                const PathData& p = paths[pid];
                if (whole_edge_square(p))
                    return true;
                if (mode == Mode::StrongTotal && end_trimmed_total_square(p))
                    return true;
            }
        }
        return false;
    }

    void set_colour(const Elem& x, Colour c) {
        if (x.kind == ElementKind::Vertex)
            vcol[x.id] = c;
        else
            ecol[x.id] = c;
    }

    bool dfs(size_t depth, int max_used) {
        if (depth == order.size())
            return true;
        const Elem& x = order[depth];
        int cmax = std::min(k, max_used + 1); // canonical colour order
        for (Colour c = 1; c <= cmax; ++c) {
            ctx.tick();
            set_colour(x, c);
            if (!creates_square(x) && dfs(depth + 1, std::max(max_used, c)))
                return true;
        }
        set_colour(x, kNoColour);
        return false;
    }

    std::optional<TotalColouring> run(int kk) {
        k = kk;
        vcol.assign(g.vertex_count(), kNoColour);
        ecol.assign(g.edge_count(), kNoColour);
        if (!order.empty() && (k < 1 || !dfs(0, 0)))
            return std::nullopt;
        TotalColouring c;
        if (mode != Mode::Edge)
            c.vertex_colours = vcol;
        if (mode != Mode::Vertex)
            c.edge_colours = ecol;
        return c;
    }
};

SolveResult solve_native(const Graph& g, Mode mode, int lb, BudgetCtx& ctx) {
    Searcher s(g, mode, ctx);
    const int k_hi = static_cast<int>(s.order.size()); // rainbow always valid
    SolveResult r;
    if (s.order.empty()) {
        r.solved = true;
        r.value = 0;
        r.lower = 0;
        return r;
    }
    for (int k = std::max(lb, 1); k <= k_hi; ++k) {
        ctx.current_lower = std::max(ctx.current_lower, k);
        if (auto c = s.run(k)) {
            r.solved = true;
            r.value = k;
            r.lower = k;
            r.certificate = std::move(*c);
            return r;
        }
    }
    throw Error("internal: iterative deepening passed the rainbow bound");
}

SolveResult solve_connected(const Graph& g, Mode mode, BudgetCtx& ctx) {
    if (mode == Mode::WeakTotal) {
        Subdivision sd = subdivide(g);
        SolveResult r = solve_native(sd.graph, Mode::Vertex, lower_bound(g, Mode::WeakTotal), ctx);
        if (r.solved && r.value > 0)
            r.certificate = from_subdivided_vertex_colours(sd, r.certificate.vertex_colours);
        else if (r.solved)
            r.certificate = TotalColouring{std::vector<Colour>(g.vertex_count(), 1), {}};
        return r;
    }
    return solve_native(g, mode, lower_bound(g, mode), ctx);
}

} // namespace

Budget Budget::from_env() {
    Budget b;
    if (const char* ms = std::getenv("THUE_LAB_BUDGET_MS"))
        b.max_millis = std::atoll(ms);
    return b;
}

namespace {
bool has_three_edge_path(const Graph& g) {
    PathEnumerator en(g, 7);
    while (en.next())
        if (en.edges().size() == 3)
            return true;
    return false;
}
} // namespace

int lower_bound(const Graph& g, Mode mode) {
    switch (mode) {
    case Mode::Vertex:
    case Mode::WeakTotal:
        return 1;
    case Mode::Edge:
        return g.max_degree(); // adjacent edges must differ
    case Mode::StrongTotal: {
        int base = g.max_degree() + 1; // incident edges plus shared endvertex
        // properness along a three-edge path forces the sequence 123123,
        // so three colours never suffice once P_4 occurs as a subgraph
        if (base < 4 && has_three_edge_path(g))
            base = 4;
        return base;
    }
    }
    return 1;
}

SolveResult exact_number(const Graph& g, Mode mode, const Budget& budget) {
    auto t0 = Clock::now();
    BudgetCtx ctx(budget);
    SolveResult out;
    out.lower = lower_bound(g, mode);
    ctx.current_lower = out.lower;

    try {
        TotalColouring merged;
        merged.vertex_colours.assign(g.vertex_count(), kNoColour);
        merged.edge_colours.assign(g.edge_count(), kNoColour);
        int value = 0;
        for (const auto& comp_vertices : g.components()) {
            InducedSubgraph sub = induced_subgraph(g, comp_vertices);
            SolveResult r = solve_connected(sub.graph, mode, ctx);
            value = std::max(value, r.value);
            if (mode != Mode::Edge && !r.certificate.vertex_colours.empty())
                for (size_t i = 0; i < sub.vertex_of.size(); ++i)
                    merged.vertex_colours[sub.vertex_of[i]] = r.certificate.vertex_colours[i];
            if (mode != Mode::Vertex && !r.certificate.edge_colours.empty())
                for (size_t i = 0; i < sub.edge_of.size(); ++i)
                    merged.edge_colours[sub.edge_of[i]] = r.certificate.edge_colours[i];
        }
        if (mode == Mode::Edge)
            merged.vertex_colours.clear();
        if (mode == Mode::Vertex)
            merged.edge_colours.clear();
        // single-vertex components in vertex/weak modes never enter a search
        // with k=0; give isolated vertices colour 1 when a palette exists
        if (mode != Mode::Edge && value > 0)
            for (Colour& c : merged.vertex_colours)
                if (c == kNoColour)
                    c = 1;
        out.solved = true;
        out.value = value;
        out.lower = value;
        out.certificate = std::move(merged);
        if (!passes(g, out.certificate, mode))
            throw Error("internal: solver certificate failed re-verification");
    } catch (const BudgetHit&) {
        out.solved = false;
        out.lower = std::max(out.lower, ctx.current_lower);
    }
    out.nodes = ctx.nodes;
    out.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return out;
}

std::optional<TotalColouring> find_colouring(const Graph& g, Mode mode, int k,
                                             const Budget& budget) {
    BudgetCtx ctx(budget);
    try {
        std::optional<TotalColouring> c;
        if (mode == Mode::WeakTotal) {
            Subdivision sd = subdivide(g);
            Searcher s(sd.graph, Mode::Vertex, ctx);
            auto sub = s.run(k);
            if (sub)
                c = from_subdivided_vertex_colours(sd, sub->vertex_colours);
        } else {
            Searcher s(g, mode, ctx);
            c = s.run(k);
        }
        if (c && !passes(g, *c, mode))
            throw Error("internal: solver certificate failed re-verification");
        return c;
    } catch (const BudgetHit&) {
        throw BudgetExhaustedError("find_colouring: budget exhausted");
    }
}

std::optional<int> brute_force_number(const Graph& g, Mode mode, int k_max,
                                      long long max_enumerations) {
    const int nv = mode == Mode::Edge ? 0 : g.vertex_count();
    const int ne = mode == Mode::Vertex ? 0 : g.edge_count();
    const int N = nv + ne;
    if (N == 0)
        return 0;
    PathChecker checker(g);
    for (int k = 1; k <= k_max; ++k) {
        long long total = 1;
        for (int i = 0; i < N; ++i) {
            if (total > max_enumerations / k)
                throw TooLargeError("brute_force_number: enumeration too large");
            total *= k;
        }
        std::vector<Colour> digits(N, 1);
        TotalColouring c;
        c.vertex_colours.resize(nv);
        c.edge_colours.resize(ne);
        while (true) {
            std::copy(digits.begin(), digits.begin() + nv, c.vertex_colours.begin());
            std::copy(digits.begin() + nv, digits.end(), c.edge_colours.begin());
            if (checker.passes(c, mode))
                return k;
            int pos = N - 1;
            while (pos >= 0 && digits[pos] == k)
                digits[pos--] = 1;
            if (pos < 0)
                break;
            ++digits[pos];
        }
    }
    return std::nullopt;
}

ThueParameters compute_parameters(const Graph& g, const Budget& budget) {
    ThueParameters p;
    auto r = exact_number(g, Mode::Vertex, budget);
    if (r.solved) {
        p.pi = r.value;
        p.pi_certificate = r.certificate;
    }
    r = exact_number(g, Mode::Edge, budget);
    if (r.solved) {
        p.pi_prime = r.value;
        p.pi_prime_certificate = r.certificate;
    }
    r = exact_number(g, Mode::WeakTotal, budget);
    if (r.solved) {
        p.pi_tw = r.value;
        p.pi_tw_certificate = r.certificate;
    }
    r = exact_number(g, Mode::StrongTotal, budget);
    if (r.solved) {
        p.pi_t = r.value;
        p.pi_t_certificate = r.certificate;
    }
    return p;
}

} // namespace thue
