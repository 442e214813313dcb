#include <doctest.h>

#include <chrono>
#include <cmath>

#include "thue/lll.hpp"

using namespace thue;

TEST_CASE("verify_lll_inequalities reproduces the three constants") {
    LllReport r = verify_lll_inequalities(3, 50);
    // exact exponents over the common denominator
    CHECK(r.expo_den == 41067);
    CHECK(r.expo_num1 == -17960);
    CHECK(r.expo_num2 == -35920);
    CHECK(r.expo_num3 == -23560);
    CHECK(std::abs(r.const1 - 0.6457) <= 2e-4);
    CHECK(std::abs(r.const2 - 0.4170003) <= 1e-6);
    CHECK(std::abs(r.const3 - 0.5634) <= 1e-4);
    CHECK(r.const1 == doctest::Approx(std::exp(-17960.0 / 41067.0)).epsilon(1e-12));
    CHECK(!r.rhs3_note.empty());
}

TEST_CASE("margins are strictly positive for all delta in 3..10, t in 1..50") {
    for (int delta = 3; delta <= 10; ++delta) {
        LllReport r = verify_lll_inequalities(delta, 50);
        CHECK(r.all_margins_positive);
        CHECK(r.violations.empty());
        REQUIRE(r.rows.size() == 50);
        for (const auto& row : r.rows) {
            CHECK(row.margin1 > 0);
            CHECK(row.margin2 > 0);
            CHECK(row.margin3 > 0);
            CHECK(row.probability > 0); // no underflow to zero at t = 50
        }
    }
}

TEST_CASE("verifier runs fast") {
    auto t0 = std::chrono::steady_clock::now();
    for (int delta = 3; delta <= 10; ++delta)
        verify_lll_inequalities(delta, 50);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    CHECK(ms < 1000.0);
}

TEST_CASE("partial sums of s*x^s converge to the closed form") {
    for (double x : {1.0 / 7.5, 1.0 / 10.0}) {
        double sum = 0, term_base = 1;
        for (int s = 1; s <= 200; ++s) {
            term_base *= x;
            sum += s * term_base;
        }
        double closed = x / ((1 - x) * (1 - x));
        CHECK(std::abs(sum - closed) < 1e-12);
    }
}

TEST_CASE("theorem_bounds") {
    TheoremBounds b3 = theorem_bounds(3);
    CHECK(b3.total_bound == doctest::Approx(135.0));
    CHECK(b3.list_bound == doctest::Approx(161.8704));
    TheoremBounds b4 = theorem_bounds(4);
    CHECK(b4.total_bound == doctest::Approx(240.0));
    CHECK(b4.list_bound == doctest::Approx(287.7696));
    CHECK_THROWS_AS(theorem_bounds(2), DeltaTooSmallError);
    CHECK_THROWS_AS(LllWeights::for_delta(2), DeltaTooSmallError);
}

TEST_CASE("moser_tardos_sample finds verified colourings") {
    // K_{1,3} with lists {1..5}: pi_T = 4 <= 5
    Graph s = make_star(3);
    auto r = moser_tardos_sample(s, ListAssignment::uniform(s, 5), SampleMode::Strong, 1, 100000);
    REQUIRE(r.ok);
    CHECK(!is_strong_total_thue(s, r.colouring));

    Graph p9 = make_path(9);
    auto rp = moser_tardos_sample(p9, ListAssignment::uniform(p9, 5), SampleMode::Strong, 7,
                                  100000);
    REQUIRE(rp.ok);
    CHECK(!is_strong_total_thue(p9, rp.colouring));

    // weak mode with small lists
    auto rw = moser_tardos_sample(p9, ListAssignment::uniform(p9, 4), SampleMode::Weak, 3, 100000);
    REQUIRE(rw.ok);
    CHECK(!is_weak_total_thue(p9, rw.colouring));
}

TEST_CASE("sampler is deterministic for a fixed seed") {
    Graph g = random_graph(10, 3, 17);
    auto lists = ListAssignment::uniform(g, 6);
    auto a = moser_tardos_sample(g, lists, SampleMode::Strong, 42, 100000);
    auto b = moser_tardos_sample(g, lists, SampleMode::Strong, 42, 100000);
    CHECK(a.ok == b.ok);
    CHECK(a.resamples == b.resamples);
    CHECK(a.colouring.vertex_colours == b.colouring.vertex_colours);
    CHECK(a.colouring.edge_colours == b.colouring.edge_colours);
}

TEST_CASE("sampler reports failure honestly when lists are hopeless") {
    Graph p = make_path(4);
    ListAssignment one;
    one.vertex_lists.assign(4, {1});
    one.edge_lists.assign(3, {1});
    auto r = moser_tardos_sample(p, one, SampleMode::Strong, 0, 50);
    CHECK(!r.ok);
    CHECK(r.resamples == 50);
    CHECK(r.last_witness.has_value());
}

TEST_CASE("per-family neighbourhood counts are wired as stated") {
    CHECK(LllReport::kFamilyCounts[0].a_count == 2);
    CHECK(LllReport::kFamilyCounts[0].c_count == 2);
    CHECK(LllReport::kFamilyCounts[1].b_count == 4);
    CHECK(LllReport::kFamilyCounts[1].c_count == 4);
    CHECK(LllReport::kFamilyCounts[2].a_count == 1);
    CHECK(LllReport::kFamilyCounts[2].b_count == 2);
    CHECK(LllReport::kFamilyCounts[2].c_count == 1);
}
