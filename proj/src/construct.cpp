#include "thue/construct.hpp"

#include <algorithm>
#include <map>

#include "thue/lll.hpp"
#include "thue/seq.hpp"

namespace thue {

namespace {

void must_pass_weak(const Graph& g, const TotalColouring& c, const char* what) {
    if (is_weak_total_thue(g, c))
        throw ConstructionFailedError(std::string(what) + ": output failed the weak checker");
}

void must_pass_strong(const Graph& g, const TotalColouring& c, const char* what) {
    if (is_strong_total_thue(g, c))
        throw ConstructionFailedError(std::string(what) + ": output failed the strong checker");
}

// Block scheme for a path with edge_count edges, edge_count divisible by 4.
// Vertex positions 0..edge_count, edge positions 1..edge_count (edge t joins
// vertices t-1 and t). Returns colour tables over {1..5} plus the list of
// vertex pairs placed by the final completion step (for local retry).
struct BlockSchemeResult {
    std::vector<Colour> vcol; // size edge_count+1
    std::vector<Colour> ecol; // size edge_count+1, index 0 unused
    std::vector<std::pair<int, int>> completion_pairs;
};

BlockSchemeResult path_block_scheme(int edge_count) {
    const int nblocks = edge_count / 4;
    BlockSchemeResult r;
    r.vcol.assign(edge_count + 1, kNoColour);
    r.ecol.assign(edge_count + 1, kNoColour);

    // 1. colour 4 on every fourth vertex
    for (int m = 0; m <= edge_count; m += 4)
        r.vcol[m] = 4;
    // 2. one colour-5 vertex per block, offset by a square-free word
    ColourSequence s = squarefree_ternary(nblocks);
    for (int i = 0; i < nblocks; ++i)
        r.vcol[4 * i + s[i]] = 5;
    // 3. the edge between two adjacent uncoloured vertices bounded by a
    // colour 4 and a colour 5 vertex gets colour 5
    for (int i = 0; i < nblocks; ++i) {
        if (s[i] == 1)
            r.ecol[4 * i + 3] = 5;
        else if (s[i] == 3)
            r.ecol[4 * i + 2] = 5;
    }
    // 4. remaining edges carry a square-free ternary word
    int open = 0;
    for (int t = 1; t <= edge_count; ++t)
        if (r.ecol[t] == kNoColour)
            ++open;
    ColourSequence w = squarefree_ternary(open);
    for (int t = 1, wi = 0; t <= edge_count; ++t)
        if (r.ecol[t] == kNoColour)
            r.ecol[t] = w[wi++];
    // 5 + 6. per-block vertex completion
    for (int i = 0; i < nblocks; ++i) {
        const int base = 4 * i;
        if (s[i] == 2) {
            // both open vertices sit between a colour-4 and the colour-5
            // vertex; take a ternary colour avoiding the incident edges
            for (int p : {base + 1, base + 3}) {
                Colour e1 = r.ecol[p], e2 = r.ecol[p + 1];
                for (Colour c = 1; c <= 3; ++c)
                    if (c != e1 && c != e2) {
                        r.vcol[p] = c;
                        break;
                    }
            }
        } else {
            // two adjacent open vertices between the colour-4 endpoints;
            // in-block patterns  a 5 b x 5 y c  (s=1)  and  a x 5 y b 5 c (s=3)
            Colour a, b, c;
            int x_pos, y_pos, other_pos;
            Colour other_excl;
            if (s[i] == 1) {
                a = r.ecol[base + 1];
                b = r.ecol[base + 2];
                c = r.ecol[base + 4];
                x_pos = base + 2;
                y_pos = base + 3;
                other_pos = y_pos;
                other_excl = c;
            } else {
                a = r.ecol[base + 1];
                b = r.ecol[base + 3];
                c = r.ecol[base + 4];
                x_pos = base + 1;
                y_pos = base + 2;
                other_pos = x_pos;
                other_excl = a;
            }
            bool have[4] = {};
            have[a] = have[b] = have[c] = true;
            Colour missing = 0;
            for (Colour cc = 1; cc <= 3; ++cc)
                if (!have[cc]) {
                    missing = cc;
                    break;
                }
            if (missing != 0) {
                r.vcol[base + 2] = missing; // the middle vertex of the block
                for (Colour cc = 1; cc <= 3; ++cc)
                    if (cc != missing && cc != other_excl) {
                        r.vcol[other_pos] = cc;
                        break;
                    }
            } else {
                r.vcol[x_pos] = c;
                r.vcol[y_pos] = a;
            }
            r.completion_pairs.push_back({std::min(x_pos, y_pos), std::max(x_pos, y_pos)});
        }
    }
    return r;
}

int padded_edge_count(int edges) {
    return std::max(4, ((edges + 3) / 4) * 4);
}

TotalColouring restrict_scheme_to_path(const BlockSchemeResult& r, int n) {
    TotalColouring c;
    c.vertex_colours.assign(r.vcol.begin(), r.vcol.begin() + n);
    c.edge_colours.assign(r.ecol.begin() + 1, r.ecol.begin() + n);
    return c;
}

// dense renumbering by first appearance (vertices in id order, then edges)
TotalColouring canonicalise_palette(const TotalColouring& c) {
    std::map<Colour, Colour> remap;
    TotalColouring out = c;
    auto touch = [&](Colour& x) {
        if (x == kNoColour)
            return;
        auto [it, fresh] = remap.insert({x, static_cast<Colour>(remap.size() + 1)});
        x = it->second;
        (void)fresh;
    };
    for (Colour& x : out.vertex_colours)
        touch(x);
    for (Colour& x : out.edge_colours)
        touch(x);
    return out;
}

} // namespace

TotalColouring colour_path_weak(int n) {
    if (n < 1)
        throw Error("colour_path_weak: need n >= 1");
    TotalColouring c;
    if (n == 1) {
        c.vertex_colours = {1};
        return c;
    }
    if (n == 2) {
        c = TotalColouring{{1, 1}, {2}};
        must_pass_weak(make_path(2), c, "colour_path_weak");
        return c;
    }
    ColourSequence word = squarefree_ternary(2 * n - 1);
    c.vertex_colours.resize(n);
    c.edge_colours.resize(n - 1);
    for (int i = 0; i < n; ++i)
        c.vertex_colours[i] = word[2 * i];
    for (int j = 0; j + 1 < n; ++j)
        c.edge_colours[j] = word[2 * j + 1];
    must_pass_weak(make_path(n), c, "colour_path_weak");
    return c;
}

TotalColouring colour_path_total(int n) {
    if (n < 5)
        throw Error("colour_path_total: need n >= 5 vertices");
    const Graph g = make_path(n);
    BlockSchemeResult scheme = path_block_scheme(padded_edge_count(n - 1));
    TotalColouring c = restrict_scheme_to_path(scheme, n);
    if (!is_strong_total_thue(g, c))
        return c;
    // local completion retry: the stated completion rule admits a valid
    // choice; search the 9 colour pairs of each completion block
    for (auto [p, q] : scheme.completion_pairs) {
        if (p >= n)
            continue;
        for (Colour cp = 1; cp <= 3; ++cp)
            for (Colour cq = 1; cq <= 3; ++cq) {
                scheme.vcol[p] = cp;
                if (q < n)
                    scheme.vcol[q] = cq;
                TotalColouring trial = restrict_scheme_to_path(scheme, n);
                if (!is_strong_total_thue(g, trial))
                    return trial;
            }
    }
    throw ConstructionFailedError("colour_path_total: no completion passed the strong checker");
}

namespace {

// scheme applied around the cycle (edge_count divisible by 4): vertex
// position p is cycle vertex p mod n, edge position t (1..n) is cycle edge
// t-1.
TotalColouring cycle_wraparound_candidate(int n) {
    const int nblocks = n / 4;
    TotalColouring c;
    c.vertex_colours.assign(n, kNoColour);
    c.edge_colours.assign(n, kNoColour);
    auto vset = [&](int pos, Colour col) { c.vertex_colours[pos % n] = col; };
    auto eset = [&](int t, Colour col) { c.edge_colours[(t - 1) % n] = col; };
    auto eget = [&](int t) { return c.edge_colours[(t - 1) % n]; };

    for (int m = 0; m < n; m += 4)
        vset(m, 4);
    ColourSequence s = squarefree_ternary(nblocks);
    for (int i = 0; i < nblocks; ++i)
        vset(4 * i + s[i], 5);
    for (int i = 0; i < nblocks; ++i) {
        if (s[i] == 1)
            eset(4 * i + 3, 5);
        else if (s[i] == 3)
            eset(4 * i + 2, 5);
    }
    int open = 0;
    for (int e = 0; e < n; ++e)
        if (c.edge_colours[e] == kNoColour)
            ++open;
    ColourSequence w = squarefree_ternary(open);
    for (int e = 0, wi = 0; e < n; ++e)
        if (c.edge_colours[e] == kNoColour)
            c.edge_colours[e] = w[wi++];

    for (int i = 0; i < nblocks; ++i) {
        const int base = 4 * i;
        if (s[i] == 2) {
            for (int p : {base + 1, base + 3}) {
                Colour e1 = eget(p), e2 = eget(p + 1);
                for (Colour cc = 1; cc <= 3; ++cc)
                    if (cc != e1 && cc != e2) {
                        vset(p, cc);
                        break;
                    }
            }
        } else {
            Colour a, b, cc2;
            int x_pos, y_pos, other_pos;
            Colour other_excl;
            if (s[i] == 1) {
                a = eget(base + 1);
                b = eget(base + 2);
                cc2 = eget(base + 4);
                x_pos = base + 2;
                y_pos = base + 3;
                other_pos = y_pos;
                other_excl = cc2;
            } else {
                a = eget(base + 1);
                b = eget(base + 3);
                cc2 = eget(base + 4);
                x_pos = base + 1;
                y_pos = base + 2;
                other_pos = x_pos;
                other_excl = a;
            }
            bool have[4] = {};
            have[a] = have[b] = have[cc2] = true;
            Colour missing = 0;
            for (Colour m = 1; m <= 3; ++m)
                if (!have[m]) {
                    missing = m;
                    break;
                }
            if (missing != 0) {
                vset(base + 2, missing);
                for (Colour m = 1; m <= 3; ++m)
                    if (m != missing && m != other_excl) {
                        vset(other_pos, m);
                        break;
                    }
            } else {
                vset(x_pos, cc2);
                vset(y_pos, a);
            }
        }
    }
    return c;
}

} // namespace

TotalColouring colour_cycle_total(int n, const Budget& budget) {
    if (n < 4)
        throw Error("colour_cycle_total: need n >= 4");
    const Graph g = make_cycle(n);

    if (n % 4 == 0) {
        TotalColouring c = cycle_wraparound_candidate(n);
        if (!is_strong_total_thue(g, c))
            return c;
    }

    // one edge of a unique colour, the remaining path coloured by the scheme
    {
        BlockSchemeResult scheme = path_block_scheme(padded_edge_count(n - 1));
        TotalColouring c;
        c.vertex_colours.assign(scheme.vcol.begin(), scheme.vcol.begin() + n);
        c.edge_colours.assign(scheme.ecol.begin() + 1, scheme.ecol.begin() + n);
        c.edge_colours.push_back(6); // closing edge n-1 joins vertices n-1 and 0
        if (!is_strong_total_thue(g, c))
            return c;
    }

    // exact search; at most 6 colours suffice
    for (int k = 4; k <= 6; ++k)
        if (auto c = find_colouring(g, Mode::StrongTotal, k, budget))
            return *c;
    throw ConstructionFailedError("colour_cycle_total: exhausted all candidates");
}

TotalColouring colour_star_total(int n) {
    if (n < 3)
        throw Error("colour_star_total: need n >= 3 leaves");
    const Graph g = make_star(n);
    TotalColouring c;
    c.vertex_colours.assign(n + 1, kNoColour);
    c.edge_colours.assign(n, kNoColour);
    c.vertex_colours[0] = n + 1; // centre
    for (int i = 0; i < n; ++i)
        c.edge_colours[i] = i + 1; // edge i joins centre and leaf i+1
    for (int leaf = 1; leaf <= n; ++leaf)
        c.vertex_colours[leaf] = leaf < n ? leaf + 1 : 1; // colour of the next edge
    must_pass_strong(g, c, "colour_star_total");
    return c;
}

TotalColouring colour_spanning_tree_bound(const Graph& g, const Budget& budget) {
    std::vector<EdgeId> tree_ids = spanning_tree_edges(g);
    Graph tree = edge_subgraph(g, tree_ids);
    std::optional<TotalColouring> tc;
    try {
        tc = find_colouring(tree, Mode::WeakTotal, 4, budget);
    } catch (const BudgetExhaustedError&) {
        throw;
    }
    if (!tc)
        throw ConstructionFailedError(
            "colour_spanning_tree_bound: spanning tree admits no 4-colour weak colouring");
    TotalColouring c;
    c.vertex_colours = tc->vertex_colours;
    c.edge_colours.assign(g.edge_count(), kNoColour);
    for (size_t j = 0; j < tree_ids.size(); ++j)
        c.edge_colours[tree_ids[j]] = tc->edge_colours[j];
    Colour fresh = 5;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (c.edge_colours[e] == kNoColour)
            c.edge_colours[e] = fresh++;
    must_pass_weak(g, c, "colour_spanning_tree_bound");
    return c;
}

TotalColouring colour_bridge_composition(const Graph& g, const BlockColourer& block_colourer,
                                         const Budget& budget) {
    BridgeDecomposition bd = bridge_decomposition(g);

    int tree_colours = 0;
    std::vector<Colour> bridge_colour(bd.bridges.size(), kNoColour);
    if (!bd.bridges.empty()) {
        SolveResult tr = exact_number(bd.quotient_tree, Mode::Edge, budget);
        if (!tr.solved)
            throw BudgetExhaustedError("colour_bridge_composition: quotient tree edge search");
        tree_colours = tr.value;
        for (size_t j = 0; j < bd.bridges.size(); ++j)
            bridge_colour[j] = tr.certificate.edge_colours[j];
    }

    BlockColourer colour_block = block_colourer;
    if (!colour_block)
        colour_block = [&budget](const Graph& block) {
            SolveResult r = exact_number(block, Mode::WeakTotal, budget);
            if (!r.solved)
                throw BudgetExhaustedError("colour_bridge_composition: block search");
            return r.certificate;
        };

    TotalColouring c;
    c.vertex_colours.assign(g.vertex_count(), kNoColour);
    c.edge_colours.assign(g.edge_count(), kNoColour);
    for (const auto& comp : bd.components) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        TotalColouring bc = canonicalise_palette(colour_block(sub.graph));
        if (is_weak_total_thue(sub.graph, bc))
            throw ConstructionFailedError(
                "colour_bridge_composition: block colouring failed the weak checker");
        for (size_t i = 0; i < sub.vertex_of.size(); ++i)
            c.vertex_colours[sub.vertex_of[i]] = tree_colours + bc.vertex_colours[i];
        for (size_t i = 0; i < sub.edge_of.size(); ++i)
            c.edge_colours[sub.edge_of[i]] = tree_colours + bc.edge_colours[i];
    }
    for (size_t j = 0; j < bd.bridges.size(); ++j)
        c.edge_colours[bd.bridges[j]] = bridge_colour[j];
    must_pass_weak(g, c, "colour_bridge_composition");
    return c;
}

TotalColouring rainbow_plus_one(const Graph& g) {
    TotalColouring c;
    c.vertex_colours.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        c.vertex_colours[v] = v + 1;
    c.edge_colours.assign(g.edge_count(), g.vertex_count() + 1);
    must_pass_weak(g, c, "rainbow_plus_one");
    return c;
}

BoundsReport bounds_report(const Graph& g, std::optional<int> faces,
                           const std::optional<ThueParameters>& solved, const Budget& budget) {
    BoundsReport rep;
    const int n = g.vertex_count(), m = g.edge_count();
    const int delta = g.max_degree();
    auto add = [&](std::string param, bool upper, double value, std::string theorem,
                   std::string note, bool assumption = false) {
        rep.entries.push_back(
            {std::move(param), upper, value, std::move(theorem), std::move(note), assumption});
    };

    if (g.is_connected())
        add("pi_tw", true, m - n + 5, "subdiv", "connected graphs");
    if (faces)
        add("pi_tw", true, 3.0 + *faces, "planar",
            "plane graphs with the supplied face count", true);
    add("pi_tw", true, std::min(13, n + 1), "outerplanar",
        "outerplanar graphs only (assumption not verified)", true);
    if (g.is_connected()) {
        BridgeDecomposition bd = bridge_decomposition(g);
        int deltaT = bd.quotient_tree.max_degree();
        if (!bd.bridges.empty() && deltaT >= 2) {
            int max_block = 0;
            bool all_solved = true;
            for (const auto& comp : bd.components) {
                InducedSubgraph sub = induced_subgraph(g, comp);
                SolveResult r = exact_number(sub.graph, Mode::WeakTotal, budget);
                if (!r.solved) {
                    all_solved = false;
                    break;
                }
                max_block = std::max(max_block, r.value);
            }
            if (all_solved)
                add("pi_tw", true, 4.0 * deltaT - 4 + max_block, "edgetree",
                    "bridge tree with max degree " + std::to_string(deltaT));
        }
    }
    if (solved && solved->pi && solved->pi_prime) {
        add("pi_tw", true, std::min(*solved->pi, *solved->pi_prime) + 1, "obe",
            "min{pi, pi'} + 1");
        add("pi_t", true, *solved->pi + *solved->pi_prime, "obs3", "pi + pi'");
    }
    if (delta >= 3) {
        TheoremBounds tb = theorem_bounds(delta);
        add("pi_t", true, tb.total_bound, "hlavna", "strict: pi_T < 15*Delta^2");
        add("pi_t", true, tb.list_bound, "pLLL", "list version (choice number bound)");
    }
    add("pi", false, 1, "trivial", "");
    add("pi_prime", false, delta, "trivial", "pairwise adjacent edges at a max-degree vertex");
    add("pi_t", false, delta + 1, "stars", "incident edges plus their shared endvertex");
    add("pi_tw", false, 1, "trivial", "");

    if (solved) {
        auto value_of = [&](const std::string& p) -> std::optional<int> {
            if (p == "pi") return solved->pi;
            if (p == "pi_prime") return solved->pi_prime;
            if (p == "pi_tw") return solved->pi_tw;
            return solved->pi_t;
        };
        for (const auto& e : rep.entries) {
            if (e.assumption)
                continue;
            auto v = value_of(e.parameter);
            if (!v)
                continue;
            if (e.is_upper && e.value < *v)
                rep.inconsistencies.push_back(e.theorem + " upper bound " +
                                              std::to_string(e.value) + " below exact " +
                                              std::to_string(*v) + " for " + e.parameter);
            if (!e.is_upper && e.value > *v)
                rep.inconsistencies.push_back(e.theorem + " lower bound " +
                                              std::to_string(e.value) + " above exact " +
                                              std::to_string(*v) + " for " + e.parameter);
        }
    }
    return rep;
}

} // namespace thue
