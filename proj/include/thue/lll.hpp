#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thue/colouring.hpp"
#include "thue/graph.hpp"

namespace thue {

// Weights of the local-lemma argument for maximum degree delta >= 3.
struct LllWeights {
    int delta;
    double a;         // 7.5 * delta^2  (vertex-repetition events)
    double b;         // 7.5 * delta^2  (edge-repetition events)
    double c;         // 10 * delta^2   (mixed alternating events)
    double list_size; // 17.9856 * delta^2

    static LllWeights for_delta(int delta); // throws DeltaTooSmallError
};

struct TheoremBounds {
    double total_bound; // 15 * delta^2, strict
    double list_bound;  // 17.9856 * delta^2
};
TheoremBounds theorem_bounds(int delta); // throws DeltaTooSmallError

// Per-event-family neighbourhood counts |A_s| <= a_count*t*s*Delta^{2s},
// |B_s| <= b_count*t*s*Delta^{2s}, |C_s| <= c_count*t*s*Delta^s
// (<= c_count/3*t*s*Delta^{2s} once Delta >= 3), as used by the three
// inequalities. Kept as data so the three derivations sit side by side.
struct EventFamilyCounts {
    const char* family;
    int a_count, b_count, c_count;
};

struct LllRow {
    int t;
    double probability; // (1/(17.9856 Delta^2))^t
    double rhs1, rhs2, rhs3;
    double margin1, margin2, margin3;
};

struct LllReport {
    int delta = 0;
    int t_max = 0;
    LllWeights weights{};
    // exact exponents of the three closed-form lower-bound constants,
    // as fractions over a common denominator
    long long expo_num1, expo_num2, expo_num3, expo_den;
    double const1, const2, const3; // exp(expo_k)
    // published values these should reproduce
    double reference_const1 = 0.6457, reference_const2 = 0.4170003, reference_const3 = 0.5634;
    std::string rhs3_note;
    std::vector<LllRow> rows;
    bool all_margins_positive = false;
    std::vector<std::string> violations;

    static const EventFamilyCounts kFamilyCounts[3];
};

// Closed-form evaluation of the three inequalities for t = 1..t_max: the
// lower bounds (const_k / base_k)^t on the right-hand sides against the
// event probability (1/(17.9856 Delta^2))^t, with per-t margins. Exact
// rational arithmetic for the exponents, floating point for exp/pow.
// A margin <= 0 is recorded as a violation, not thrown.
LllReport verify_lll_inequalities(int delta, int t_max);

// ---------------------------------------------------------------------------

struct ListAssignment {
    std::vector<std::vector<Colour>> vertex_lists;
    std::vector<std::vector<Colour>> edge_lists;

    static ListAssignment uniform(const Graph& g, int list_size); // lists {1..list_size}
};

enum class SampleMode { Weak, Strong };

struct SampleResult {
    bool ok = false;
    TotalColouring colouring; // verified by the full checker when ok
    long long resamples = 0;
    std::optional<Witness> last_witness; // on failure
};

// Resampling search for a list total Thue colouring: draw every element
// uniformly from its list, repeatedly find the first violating path of at
// most path_cap elements (default min(2|V|, 16)) and redraw all elements of
// that path. A candidate that survives the capped check is accepted only if
// the full uncapped checker passes; a long-path violation found there is
// resampled like any other. Deterministic for a fixed seed. A Failed result
// is not a disproof of existence.
SampleResult moser_tardos_sample(const Graph& g, const ListAssignment& lists, SampleMode mode,
                                 std::uint64_t seed, long long max_resamples,
                                 std::optional<int> path_cap = {});

} // namespace thue
