#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "fallgraph/coloring.hpp"
#include "fallgraph/errors.hpp"
#include "fallgraph/generate.hpp"

using namespace fallgraph;

namespace {

// Every total assignment of k colors to n vertices, for small brute force.
void for_each_total_coloring(int n, int k, const std::function<void(const Coloring&)>& fn) {
    std::vector<int> a(n, 0);
    for (;;) {
        fn(Coloring(k, a));
        int i = n - 1;
        while (i >= 0 && a[i] == k - 1)
            a[i--] = 0;
        if (i < 0)
            return;
        ++a[i];
    }
}

} // namespace

TEST_CASE("is_proper on totals and partials") {
    Graph k2(2, {{0, 1}});
    CHECK(is_proper(k2, Coloring(2, {0, 1})));
    CHECK_FALSE(is_proper(k2, Coloring(2, {0, 0})));
    CHECK(is_proper(k2, Coloring(2, {0, kUncolored})));

    Graph c5 = make_cycle(5);
    CHECK(is_proper(c5, Coloring(3, {0, 1, 0, 1, 2})));
    CHECK_FALSE(is_proper(c5, Coloring(3, {0, 1, 0, 1, 0})));

    CHECK_THROWS_AS(is_proper(k2, Coloring(2, {0})), InputError); // size mismatch
    CHECK_THROWS_AS(Coloring(2, {0, 5}), InputError);             // color outside palette
}

TEST_CASE("goodness on the 5-cycle witness") {
    Graph c5 = make_cycle(5);
    Coloring w(3, {0, 1, 0, 1, 2});

    auto at2 = goodness(c5, w, 2);
    CHECK(at2.bad_count == 0);

    auto at1 = goodness(c5, w, 1);
    CHECK(at1.missing[1] == std::vector<int>{2}); // ball {0,1,2} shows colors {0,1}
    CHECK(std::find(at1.bad_vertices.begin(), at1.bad_vertices.end(), 1) !=
          at1.bad_vertices.end());
}

TEST_CASE("single-color palettes are always 0-good") {
    for (int n : {1, 2, 5}) {
        Graph g = make_path(n);
        Coloring c(1, std::vector<int>(n, 0));
        for (int d : {0, 1, 3})
            CHECK(goodness(g, c, d).bad_count == 0);
    }
}

TEST_CASE("goodness_partial counts only colored representatives") {
    Graph k4 = make_complete(4);
    CHECK(goodness_partial(k4, Coloring(3, {0, 1, 2, kUncolored}), 1).bad_count == 0);

    Graph k2(2, {{0, 1}});
    auto rep = goodness_partial(k2, Coloring(2, {0, kUncolored}), 5);
    CHECK(rep.bad_count == 2); // color 1 never used

    Graph p3 = make_path(3);
    CHECK(goodness_partial(p3, Coloring(3, {0, 1, 2}), 2).bad_count == 0);
}

TEST_CASE("goodness_partial coincides with goodness on total colorings") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_tree(3 + static_cast<int>(rng() % 6), rng());
        std::vector<int> a(g.order());
        for (auto& x : a)
            x = static_cast<int>(rng() % 3);
        Coloring c(3, a);
        for (int d : {0, 1, 2}) {
            auto g1 = goodness(g, c, d);
            auto g2 = goodness_partial(g, c, d);
            CHECK(g1.bad_vertices == g2.bad_vertices);
            CHECK(g1.missing == g2.missing);
        }
    }
}

TEST_CASE("is_distance_fall on bipartite, C5, diameter-2 graphs") {
    // Connected bipartite graph with its 2-coloring is fall at d=1.
    Graph ladder = cartesian_product(Graph(2, {{0, 1}}), make_path(3));
    Coloring bip(2, {0, 1, 0, 1, 0, 1});
    REQUIRE(is_proper(ladder, bip));
    CHECK(is_distance_fall(ladder, bip, 1));

    // No proper 3-coloring of C5 is distance-1 fall (brute force over 3^5).
    Graph c5 = make_cycle(5);
    int proper_count = 0;
    for_each_total_coloring(5, 3, [&](const Coloring& c) {
        if (!is_proper(c5, c))
            return;
        ++proper_count;
        CHECK_FALSE(is_distance_fall(c5, c, 1));
    });
    CHECK(proper_count == 30); // sanity: C5 has 30 proper 3-colorings

    // Diameter 2: every proper 3-coloring using all three colors is
    // distance-2 fall.
    for_each_total_coloring(5, 3, [&](const Coloring& c) {
        if (!is_proper(c5, c))
            return;
        CHECK(is_distance_fall(c5, c, 2));
    });
}

TEST_CASE("a coloring with an unused color is never fall") {
    Graph c6 = make_cycle(6);
    Coloring c(3, {0, 1, 0, 1, 0, 1});
    REQUIRE(is_proper(c6, c));
    for (int d = 0; d < 8; ++d)
        CHECK_FALSE(is_distance_fall(c6, c, d));
}

TEST_CASE("color_classes partitions the colored vertices") {
    auto classes = color_classes(Coloring(3, {0, 1, 0, 1, 2}));
    CHECK(classes == std::vector<std::vector<int>>{{0, 2}, {1, 3}, {4}});

    auto empty = color_classes(Coloring::all_uncolored(4, 3));
    CHECK(empty == std::vector<std::vector<int>>{{}, {}, {}});

    auto k2 = color_classes(Coloring(2, {0, 1}));
    CHECK(k2 == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("independent distance dominating sets") {
    Graph c5 = make_cycle(5);
    CHECK(is_independent_distance_dominating(c5, {0, 2}, 1));
    CHECK_FALSE(is_independent_distance_dominating(c5, {0, 1}, 1)); // adjacent
    CHECK_FALSE(is_independent_distance_dominating(c5, {0}, 1));    // vertex 2 uncovered

    Graph p7 = make_path(7);
    CHECK(is_independent_distance_dominating(p7, {1, 4}, 2));
    CHECK_THROWS_AS(is_independent_distance_dominating(p7, {9}, 2), InputError);
}

TEST_CASE("fall coloring iff every class is independent distance dominating") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = trial % 2 == 0 ? random_tree(n, rng())
                                 : random_tripartite_connected(n, 0.4, rng());
        int k = 2 + static_cast<int>(rng() % 3);
        int d = static_cast<int>(rng() % 3);
        std::vector<int> a(n);
        for (auto& x : a)
            x = static_cast<int>(rng() % k);
        Coloring c(k, a);
        bool fall = is_distance_fall(g, c, d);
        bool classes_ok = is_proper(g, c);
        for (const auto& cls : color_classes(c))
            classes_ok = classes_ok && is_independent_distance_dominating(g, cls, d);
        CHECK(fall == classes_ok);
    }
}

TEST_CASE("fall colorings stay fall at larger distances") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = random_tripartite_connected(n, 0.5, rng());
        std::vector<int> a(n);
        for (auto& x : a)
            x = static_cast<int>(rng() % 3);
        Coloring c(3, a);
        for (int d = 0; d < 4; ++d)
            if (is_distance_fall(g, c, d))
                CHECK(is_distance_fall(g, c, d + 1));
    }
}

TEST_CASE("d at least the diameter with all colors used means 0 bad vertices") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = random_tree(n, rng());
        int diam = *structure_queries(g).diameter;
        std::vector<int> a(n);
        int k = 1 + static_cast<int>(rng() % 3);
        for (int v = 0; v < n; ++v)
            a[v] = v < k ? v : static_cast<int>(rng() % k); // all k colors used
        Coloring c(k, a);
        CHECK(goodness(g, c, diam).bad_count == 0);
    }
}
