#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thue/colouring.hpp"
#include "thue/graph.hpp"

namespace thue {

struct Budget {
    long long max_nodes = 1'000'000'000LL;
    long long max_millis = 600'000; // 10 min

    static Budget from_env(); // honours THUE_LAB_BUDGET_MS
};

struct SolveResult {
    bool solved = false;
    int value = -1;              // smallest k admitting a valid colouring
    TotalColouring certificate;  // vertex/edge side populated per mode
    int lower = 1;               // proven lower bound (== value when solved)
    long long nodes = 0;
    double time_ms = 0.0;
};

// Mode-appropriate lower bound used to seed iterative deepening:
// vertex -> 1, edge -> max degree, weak-total -> 1, strong-total -> max
// degree + 1 (incident edges plus the shared endvertex are pairwise distinct).
int lower_bound(const Graph& g, Mode mode);

// Smallest k admitting a valid colouring of the given mode, by iterative
// deepening on k with a backtracking search using incremental repetition
// checks. Weak-total runs as vertex mode on the subdivision. Components of a
// disconnected graph are solved independently (the value is the max).
// result.solved == false means the budget ran out; result.lower carries the
// proven bound. Certificates always re-verify against the checkers.
SolveResult exact_number(const Graph& g, Mode mode, const Budget& budget = {});

// Feasibility at one fixed k; nullopt when the search space is exhausted
// without a solution. Throws BudgetExhaustedError when the budget runs out.
std::optional<TotalColouring> find_colouring(const Graph& g, Mode mode, int k,
                                             const Budget& budget = {});

// Independent oracle: smallest k <= k_max admitting a valid colouring, by
// exhaustive enumeration of all k^N colourings with the full non-incremental
// checker. Throws TooLargeError when k^N exceeds max_enumerations. Test use
// only; nullopt when no k <= k_max works.
std::optional<int> brute_force_number(const Graph& g, Mode mode, int k_max,
                                      long long max_enumerations = 10'000'000LL);

struct ThueParameters {
    std::optional<int> pi, pi_prime, pi_tw, pi_t;
    TotalColouring pi_certificate, pi_prime_certificate, pi_tw_certificate, pi_t_certificate;
};

// All four parameters of one graph (each within its own budget share).
ThueParameters compute_parameters(const Graph& g, const Budget& budget = {});

} // namespace thue
