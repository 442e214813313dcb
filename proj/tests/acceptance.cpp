// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thue/construct.hpp"
#include "thue/lll.hpp"
#include "thue/rng.hpp"
#include "thue/seq.hpp"
#include "thue/solver.hpp"

using namespace thue;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& s) {
    g_notes.push_back(s);
}

void require(bool cond, const std::string& what) {
    if (!cond) {
        note("FAILED: " + what);
        throw std::runtime_error(what);
    }
}

void criterion(int id, const std::string& desc, const std::function<void()>& body) {
    g_notes.clear();
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string err;
    try {
        body();
    } catch (const std::exception& e) {
        ok = false;
        err = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %2d (%6.1fs): %s%s%s\n", ok ? "PASS" : "FAIL", id, secs,
                desc.c_str(), ok ? "" : " -- ", err.c_str());
    for (const auto& n : g_notes)
        std::printf("        %s\n", n.c_str());
    std::fflush(stdout);
    if (!ok)
        ++g_failures;
}

Budget seconds(long long s) {
    Budget b;
    b.max_millis = s * 1000;
    return b;
}

int solved_value(const Graph& g, Mode mode, const Budget& b, const std::string& what) {
    SolveResult r = exact_number(g, mode, b);
    require(r.solved, what + ": budget exhausted");
    return r.value;
}

// connected graphs with <= max_n vertices and <= max_m edges, one per
// isomorphism class (canonical form = lexicographically smallest adjacency
// bitstring over all vertex permutations)
std::vector<Graph> connected_iso_distinct(int max_n, int max_m) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> all_pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                all_pairs.push_back({u, v});
        const int np = static_cast<int>(all_pairs.size());
        std::vector<int> perm(n);
        std::set<std::vector<bool>> seen;
        for (unsigned mask = 0; mask < (1u << np); ++mask) {
            if (__builtin_popcount(mask) > max_m)
                continue;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < np; ++i)
                if (mask & (1u << i))
                    edges.push_back(all_pairs[i]);
            Graph g(n, edges);
            if (!g.is_connected())
                continue;
            std::vector<bool> best;
            for (int i = 0; i < n; ++i)
                perm[i] = i;
            do {
                std::vector<bool> bits(np, false);
                int idx = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        bits[idx++] = g.edge_between(perm[u], perm[v]).has_value();
                if (best.empty() || bits < best)
                    best = bits;
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.insert(best).second)
                out.push_back(g);
        }
    }
    return out;
}

// bridge-rich test graph: a chain or star of small 2-edge-connected blocks
// joined by bridges; the bridge tree has max degree >= 2
Graph bridge_rich_graph(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    int next = 0;
    std::vector<int> anchors;
    int blocks = 3 + static_cast<int>(detail::uniform_below(rng, 3));
    for (int b = 0; b < blocks; ++b) {
        switch (detail::uniform_below(rng, 4)) {
        case 0: { // triangle
            int a = next;
            edges.push_back({a, a + 1});
            edges.push_back({a + 1, a + 2});
            edges.push_back({a, a + 2});
            next += 3;
            anchors.push_back(a);
            break;
        }
        case 1: { // 4-cycle
            int a = next;
            for (int i = 0; i < 4; ++i)
                edges.push_back({a + i, a + (i + 1) % 4});
            next += 4;
            anchors.push_back(a);
            break;
        }
        case 2: { // diamond
            int a = next;
            edges.push_back({a, a + 1});
            edges.push_back({a, a + 2});
            edges.push_back({a + 1, a + 2});
            edges.push_back({a + 1, a + 3});
            edges.push_back({a + 2, a + 3});
            next += 4;
            anchors.push_back(a);
            break;
        }
        default: { // single vertex
            anchors.push_back(next);
            next += 1;
            break;
        }
        }
    }
    // connect blocks into a random tree of bridges
    for (size_t b = 1; b < anchors.size(); ++b) {
        int prev = anchors[detail::uniform_below(rng, b)];
        edges.push_back({prev, anchors[b]});
    }
    return Graph(next, edges);
}

} // namespace

int main() {
    std::printf("acceptance suite\n");

    criterion(1, "cycle Thue chromatic numbers (vertex mode)", [] {
        for (int n : {5, 7, 9, 10})
            require(solved_value(make_cycle(n), Mode::Vertex, seconds(60),
                                 "C_" + std::to_string(n)) == 4,
                    "pi(C_" + std::to_string(n) + ") == 4");
        for (int n : {3, 4, 6, 8, 11, 12})
            require(solved_value(make_cycle(n), Mode::Vertex, seconds(60),
                                 "C_" + std::to_string(n)) == 3,
                    "pi(C_" + std::to_string(n) + ") == 3");
    });

    criterion(2, "weak total Thue numbers of cycles, with subdivision cross-checks", [] {
        for (int n : {5, 7})
            require(solved_value(make_cycle(n), Mode::WeakTotal, seconds(120),
                                 "C_" + std::to_string(n)) == 4,
                    "pi_tw(C_" + std::to_string(n) + ") == 4");
        for (int n : {3, 4, 6, 8, 9})
            require(solved_value(make_cycle(n), Mode::WeakTotal, seconds(120),
                                 "C_" + std::to_string(n)) == 3,
                    "pi_tw(C_" + std::to_string(n) + ") == 3");
        require(solved_value(make_cycle(10), Mode::Vertex, seconds(120), "C_10") == 4,
                "pi(C_10) == 4");
        require(solved_value(make_cycle(14), Mode::Vertex, seconds(120), "C_14") == 4,
                "pi(C_14) == 4");
        require(solved_value(make_cycle(18), Mode::Vertex, seconds(120), "C_18") == 3,
                "pi(C_18) == 3");
    });

    criterion(3, "stars: strong n+1, weak 3, constructions verify up to n=10", [] {
        for (int n : {3, 4, 5})
            require(solved_value(make_star(n), Mode::StrongTotal, seconds(60),
                                 "K_{1," + std::to_string(n) + "}") == n + 1,
                    "pi_T(K_{1," + std::to_string(n) + "}) == n+1");
        for (int n : {2, 3, 4, 5})
            require(solved_value(make_star(n), Mode::WeakTotal, seconds(60),
                                 "K_{1," + std::to_string(n) + "}") == 3,
                    "pi_tw(K_{1," + std::to_string(n) + "}) == 3");
        for (int n = 3; n <= 10; ++n) {
            TotalColouring c = colour_star_total(n);
            require(!is_strong_total_thue(make_star(n), c).has_value(),
                    "star construction verifies, n=" + std::to_string(n));
            require(c.colours_used() == n + 1, "star construction uses n+1 colours");
        }
    });

    criterion(4, "paths: 5-colour construction for n=5..101, exact lower bound 4", [] {
        for (int n = 5; n <= 101; ++n) {
            TotalColouring c = colour_path_total(n);
            require(c.colours_used() <= 5,
                    "path construction <= 5 colours, n=" + std::to_string(n));
            require(!is_strong_total_thue(make_path(n), c).has_value(),
                    "path construction verifies, n=" + std::to_string(n));
        }
        for (int n = 4; n <= 8; ++n) {
            int v = solved_value(make_path(n), Mode::StrongTotal, seconds(60),
                                 "P_" + std::to_string(n));
            require(v >= 4, "pi_T(P_" + std::to_string(n) + ") >= 4");
            note("pi_T(P_" + std::to_string(n) + ") = " + std::to_string(v));
        }
    });

    criterion(5, "diamond: weak total Thue number 3", [] {
        require(solved_value(make_diamond(), Mode::WeakTotal, seconds(60), "diamond") == 3,
                "pi_tw(diamond) == 3");
    });

    criterion(6, "sandwich invariants + brute-force agreement, all graphs <=5 vertices <=6 edges",
              [] {
        auto graphs = connected_iso_distinct(5, 6);
        note("isomorphism-distinct connected graphs: " + std::to_string(graphs.size()));
        const Mode modes[] = {Mode::Vertex, Mode::Edge, Mode::WeakTotal, Mode::StrongTotal};
        for (size_t gi = 0; gi < graphs.size(); ++gi) {
            const Graph& g = graphs[gi];
            int vals[4];
            for (int mi = 0; mi < 4; ++mi) {
                SolveResult r = exact_number(g, modes[mi], seconds(300));
                require(r.solved, "solver exhausted on graph " + std::to_string(gi));
                auto bf = brute_force_number(g, modes[mi], r.value, 2'000'000'000LL);
                require(bf.has_value() && *bf == r.value,
                        "brute force agrees, graph " + std::to_string(gi) + " mode " +
                            std::to_string(mi));
                vals[mi] = r.value;
            }
            int pi = vals[0], pi_prime = vals[1], pi_tw = vals[2], pi_t = vals[3];
            require(std::max(pi, pi_prime) <= pi_t, "max(pi,pi') <= pi_T");
            require(pi_t <= pi + pi_prime, "pi_T <= pi + pi'");
            require(pi_tw <= pi_t, "pi_tw <= pi_T");
            require(pi_tw <= std::min(pi, pi_prime) + 1, "pi_tw <= min(pi,pi')+1");
        }
    });

    criterion(7, "subdivision equivalence on 500 random colouring instances", [] {
        std::mt19937_64 rng(2024);
        int disagreements = 0;
        for (int trial = 0; trial < 500; ++trial) {
            int n = 4 + static_cast<int>(detail::uniform_below(rng, 7)); // 4..10
            int cap = 2 + static_cast<int>(detail::uniform_below(rng, 3));
            Graph g = random_graph(n, cap, 1000 + trial);
            int palette = 2 + static_cast<int>(detail::uniform_below(rng, 6));
            TotalColouring c;
            c.vertex_colours.resize(g.vertex_count());
            c.edge_colours.resize(g.edge_count());
            for (auto& x : c.vertex_colours)
                x = 1 + static_cast<int>(detail::uniform_below(rng, palette));
            for (auto& x : c.edge_colours)
                x = 1 + static_cast<int>(detail::uniform_below(rng, palette));
            Subdivision sd = subdivide(g);
            bool weak_ok = !is_weak_total_thue(g, c).has_value();
            bool sub_ok =
                !is_nonrepetitive_vertex(sd.graph, to_subdivided_vertex_colours(sd, c))
                     .has_value();
            if (weak_ok != sub_ok)
                ++disagreements;
        }
        require(disagreements == 0, "zero disagreements");
    });

    criterion(8, "construction bounds on random graphs", [] {
        for (int i = 0; i < 50; ++i) {
            Graph g = random_graph(6 + i % 7, 2 + i % 3, 500 + i); // <= 12 vertices, connected
            TotalColouring c = colour_spanning_tree_bound(g, seconds(120));
            require(!is_weak_total_thue(g, c).has_value(),
                    "spanning-tree colouring verifies, i=" + std::to_string(i));
            require(c.colours_used() <= g.edge_count() - g.vertex_count() + 5,
                    "spanning-tree colouring within m-n+5, i=" + std::to_string(i));
        }
        for (int i = 0; i < 20; ++i) {
            Graph g = bridge_rich_graph(900 + i);
            TotalColouring c = colour_bridge_composition(g, {}, seconds(120));
            require(!is_weak_total_thue(g, c).has_value(),
                    "bridge composition verifies, i=" + std::to_string(i));
            auto bd = bridge_decomposition(g);
            int deltaT = bd.quotient_tree.max_degree();
            require(deltaT >= 2, "bridge tree max degree >= 2, i=" + std::to_string(i));
            int max_block = 0;
            for (const auto& comp : bd.components) {
                auto sub = induced_subgraph(g, comp);
                max_block = std::max(
                    max_block, solved_value(sub.graph, Mode::WeakTotal, seconds(120), "block"));
            }
            require(c.colours_used() <= 4 * deltaT - 4 + max_block,
                    "bridge composition within 4D(T)-4+max block, i=" + std::to_string(i));
        }
    });

    criterion(9, "local-lemma numerics: constants and margins", [] {
        auto t0 = std::chrono::steady_clock::now();
        LllReport r3 = verify_lll_inequalities(3, 50);
        require(std::abs(r3.const1 - 0.6457) <= 2e-4, "rhs1 constant 0.6457 +- 2e-4");
        require(std::abs(r3.const2 - 0.4170003) <= 1e-6, "rhs2 constant 0.4170003 +- 1e-6");
        require(std::abs(r3.const3 - 0.5634) <= 1e-4, "rhs3 constant 0.5634 +- 1e-4");
        note("computed constants: " + std::to_string(r3.const1) + ", " +
             std::to_string(r3.const2) + ", " + std::to_string(r3.const3));
        for (int delta = 3; delta <= 10; ++delta) {
            LllReport r = verify_lll_inequalities(delta, 50);
            require(r.all_margins_positive && r.violations.empty(),
                    "positive margins, delta=" + std::to_string(delta));
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        require(secs < 1.0, "verifier under one second");
    });

    criterion(10, "sampler soundness: 100 seeded runs, lists of size 162", [] {
        int done = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            Graph g = random_graph(8 + seed % 5, 3, 3000 + seed); // <= 12 vertices, Delta <= 3
            auto lists = ListAssignment::uniform(g, 162);
            SampleResult r = moser_tardos_sample(g, lists, SampleMode::Strong, seed, 100000);
            require(r.ok, "sampler succeeded, seed=" + std::to_string(seed));
            require(!is_strong_total_thue(g, r.colouring).has_value(),
                    "sampler output passes the full strong checker, seed=" +
                        std::to_string(seed));
            ++done;
        }
        require(done == 100, "all 100 runs completed");
    });

    criterion(11, "sequence engine: generator validated, checker matches oracle exhaustively",
              [] {
        auto w = squarefree_ternary(1000);
        require(!contains_square(w).has_value(), "squarefree_ternary(1000) has no square");
        ColourSequence prefix(w.begin(), w.begin() + 300);
        require(!oracle::contains_square(prefix).has_value(),
                "all-blocks oracle confirms the length-300 prefix");
        for (int len = 0; len <= 12; ++len) {
            ColourSequence word(len, 1);
            while (true) {
                auto got = contains_square(word);
                auto want = oracle::contains_square(word);
                bool same = got.has_value() == want.has_value() &&
                            (!got || (got->start == want->start &&
                                      got->half_length == want->half_length));
                require(same, "checker matches oracle on every ternary word of length <= 12");
                int pos = len - 1;
                while (pos >= 0 && word[pos] == 3)
                    word[pos--] = 1;
                if (pos < 0)
                    break;
                ++word[pos];
            }
        }
    });

    std::printf("%d criteria failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
