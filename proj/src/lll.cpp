#include "thue/lll.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "thue/rng.hpp"

namespace thue {

namespace {

struct Fraction {
    long long num = 0;
    long long den = 1;

    void reduce() {
        long long g = std::gcd(std::llabs(num), std::llabs(den));
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }
    Fraction operator+(const Fraction& o) const {
        Fraction r{num * o.den + o.num * den, den * o.den};
        r.reduce();
        return r;
    }
    Fraction operator*(const Fraction& o) const {
        Fraction r{num * o.num, den * o.den};
        r.reduce();
        return r;
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// sum_{s>=1} s x^s = x / (1-x)^2 for x = p/q:  p*q / (q-p)^2
Fraction weighted_geometric_sum(long long p, long long q) {
    Fraction r{p * q, (q - p) * (q - p)};
    r.reduce();
    return r;
}

} // namespace

const EventFamilyCounts LllReport::kFamilyCounts[3] = {
    // vertex-repetition events: 2ts vertex paths, 2ts mixed paths share a vertex
    {"vertex", 2, 0, 2},
    // edge-repetition events: 4ts edge paths, 4ts mixed paths share an edge
    {"edge", 0, 4, 4},
    // mixed alternating events: ts vertex paths, 2ts edge paths, ts mixed paths
    {"mixed", 1, 2, 1},
};

LllWeights LllWeights::for_delta(int delta) {
    if (delta < 3)
        throw DeltaTooSmallError("LLL weights require maximum degree >= 3");
    double d2 = static_cast<double>(delta) * delta;
    return {delta, 7.5 * d2, 7.5 * d2, 10.0 * d2, 17.9856 * d2};
}

TheoremBounds theorem_bounds(int delta) {
    if (delta < 3)
        throw DeltaTooSmallError("theorem_bounds requires maximum degree >= 3");
    double d2 = static_cast<double>(delta) * delta;
    return {15.0 * d2, 17.9856 * d2};
}

LllReport verify_lll_inequalities(int delta, int t_max) {
    if (t_max < 1)
        throw Error("verify_lll_inequalities: need t_max >= 1");
    LllReport rep;
    rep.delta = delta;
    rep.t_max = t_max;
    rep.weights = LllWeights::for_delta(delta);

    // Delta^2/a = Delta^2/b = 2/15 and Delta^2/c = 1/10, independent of Delta
    const Fraction sum_ab = weighted_geometric_sum(2, 15); // 30/169
    const Fraction sum_c = weighted_geometric_sum(1, 10);  // 10/81
    Fraction expo[3];
    for (int k = 0; k < 3; ++k) {
        const auto& f = LllReport::kFamilyCounts[k];
        // |C_s| <= c_count * t * s * Delta^s <= (c_count/3) * t * s * Delta^{2s}
        Fraction e = Fraction{f.a_count + f.b_count, 1} * sum_ab +
                     Fraction{f.c_count, 3} * sum_c;
        expo[k] = Fraction{-e.num, e.den};
    }
    long long common = std::lcm(std::lcm(expo[0].den, expo[1].den), expo[2].den);
    rep.expo_den = common;
    rep.expo_num1 = expo[0].num * (common / expo[0].den);
    rep.expo_num2 = expo[1].num * (common / expo[1].den);
    rep.expo_num3 = expo[2].num * (common / expo[2].den);
    rep.const1 = std::exp(expo[0].value());
    rep.const2 = std::exp(expo[1].value());
    rep.const3 = std::exp(expo[2].value());
    rep.rhs3_note =
        "rhs3 is computed from its exponent sum " + std::to_string(rep.expo_num3) + "/" +
        std::to_string(rep.expo_den) +
        " giving exp = " + std::to_string(rep.const3) +
        "; the published intermediate factor exp(-8980/10266.75) = 0.4170 is inconsistent with "
        "the published final constant 0.5634, which this exponent reproduces.";

    const double d2 = static_cast<double>(delta) * delta;
    const double bases[3] = {7.5 * d2, 7.5 * d2, 10.0 * d2};
    const double consts[3] = {rep.const1, rep.const2, rep.const3};
    rep.all_margins_positive = true;
    for (int t = 1; t <= t_max; ++t) {
        LllRow row;
        row.t = t;
        row.probability = std::pow(1.0 / rep.weights.list_size, t);
        double rhs[3];
        for (int k = 0; k < 3; ++k)
            rhs[k] = std::pow(consts[k] / bases[k], t);
        row.rhs1 = rhs[0];
        row.rhs2 = rhs[1];
        row.rhs3 = rhs[2];
        row.margin1 = rhs[0] - row.probability;
        row.margin2 = rhs[1] - row.probability;
        row.margin3 = rhs[2] - row.probability;
        for (int k = 0; k < 3; ++k)
            if (rhs[k] - row.probability <= 0) {
                rep.all_margins_positive = false;
                rep.violations.push_back("inequality " + std::to_string(k + 1) +
                                         " violated at t=" + std::to_string(t));
            }
        rep.rows.push_back(row);
    }
    return rep;
}

// ---------------------------------------------------------------------------

ListAssignment ListAssignment::uniform(const Graph& g, int list_size) {
    if (list_size < 1)
        throw Error("ListAssignment::uniform: need list_size >= 1");
    std::vector<Colour> palette(list_size);
    for (int i = 0; i < list_size; ++i)
        palette[i] = i + 1;
    ListAssignment la;
    la.vertex_lists.assign(g.vertex_count(), palette);
    la.edge_lists.assign(g.edge_count(), palette);
    return la;
}

SampleResult moser_tardos_sample(const Graph& g, const ListAssignment& lists, SampleMode mode,
                                 std::uint64_t seed, long long max_resamples,
                                 std::optional<int> path_cap) {
    if (static_cast<int>(lists.vertex_lists.size()) != g.vertex_count() ||
        static_cast<int>(lists.edge_lists.size()) != g.edge_count())
        throw Error("moser_tardos_sample: list table sizes do not match the graph");
    for (const auto& l : lists.vertex_lists)
        if (l.empty())
            throw Error("moser_tardos_sample: empty vertex list");
    for (const auto& l : lists.edge_lists)
        if (l.empty())
            throw Error("moser_tardos_sample: empty edge list");

    const int cap = path_cap.value_or(std::min(2 * g.vertex_count(), 16));
    const Mode check_mode = mode == SampleMode::Weak ? Mode::WeakTotal : Mode::StrongTotal;

    std::mt19937_64 rng(seed);
    SampleResult res;
    auto& c = res.colouring;
    c.vertex_colours.resize(g.vertex_count());
    c.edge_colours.resize(g.edge_count());
    auto draw_vertex = [&](VertexId v) {
        const auto& l = lists.vertex_lists[v];
        c.vertex_colours[v] = l[detail::uniform_below(rng, l.size())];
    };
    auto draw_edge = [&](EdgeId e) {
        const auto& l = lists.edge_lists[e];
        c.edge_colours[e] = l[detail::uniform_below(rng, l.size())];
    };
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        draw_vertex(v);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        draw_edge(e);

    while (true) {
        std::optional<Witness> w = find_violation_capped(g, c, check_mode, cap);
        if (!w) {
            // candidate: confirm with the full checker
            w = mode == SampleMode::Weak ? is_weak_total_thue(g, c)
                                         : is_strong_total_thue(g, c);
            if (!w) {
                res.ok = true;
                return res;
            }
        }
        if (res.resamples >= max_resamples) {
            res.ok = false;
            res.last_witness = std::move(w);
            return res;
        }
        ++res.resamples;
        for (const ElementRef& el : w->path.elements) {
            if (el.kind == ElementKind::Vertex)
                draw_vertex(el.id);
            else
                draw_edge(el.id);
        }
    }
}

} // namespace thue
