#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wsat/constructions.hpp"
#include "wsat/percolation.hpp"

using wsat::LabeledGraph;
using wsat::PatternGraph;

namespace {

PatternGraph k3() { return PatternGraph(LabeledGraph::clique(3)); }
PatternGraph k4() { return PatternGraph(LabeledGraph::clique(4)); }

} // namespace

TEST_CASE("anchored embeddings") {
    LabeledGraph tri = LabeledGraph::clique(3);
    CHECK(wsat::find_embedding_using_edge(k3(), tri, 0, 2).has_value());

    auto emb = wsat::find_embedding_using_edge(k3(), LabeledGraph::path(4), 1, 2);
    CHECK_FALSE(emb.has_value());

    LabeledGraph h = LabeledGraph::clique(5);
    h.remove_edge(0, 1);
    auto phi = wsat::find_embedding_using_edge(k4(), h, 2, 3);
    REQUIRE(phi.has_value());
    // the copy must live on {2,3,4} plus 0 or 1, and preserve all K_4 edges
    std::vector<char> hit(5, 0);
    for (int img : *phi) hit[img] = 1;
    CHECK(hit[2]);
    CHECK(hit[3]);
    CHECK(hit[4]);
    CHECK((hit[0] ^ hit[1]));
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) CHECK(h.has_edge((*phi)[a], (*phi)[b]));
}

TEST_CASE("embedding requires the anchor to be a host edge") {
    LabeledGraph h = LabeledGraph::path(3);
    CHECK_THROWS_AS(wsat::find_embedding_using_edge(k3(), h, 0, 2), std::invalid_argument);
}

TEST_CASE("addable_edges examples") {
    {
        auto add = wsat::addable_edges(k3(), LabeledGraph::path(3));
        REQUIRE(add.size() == 1);
        CHECK(add[0] == std::pair{0, 2});
    }
    {
        LabeledGraph two(4);
        two.add_edge(0, 1);
        two.add_edge(2, 3);
        CHECK(wsat::addable_edges(k3(), two).empty());
    }
    {
        // K_4 minus one edge inside a 6-vertex set, two vertices isolated
        LabeledGraph h(6);
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v)
                if (!(u == 2 && v == 3)) h.add_edge(u, v);
        auto add = wsat::addable_edges(k4(), h);
        REQUIRE(add.size() == 1);
        CHECK(add[0] == std::pair{2, 3});
    }
}

TEST_CASE("closure fixpoints") {
    CHECK(wsat::closure(k3(), LabeledGraph::path(5)) == LabeledGraph::clique(5));
    CHECK(wsat::closure(k4(), LabeledGraph::clique(6)) == LabeledGraph::clique(6));

    // the clique-join witness for K_4 on 6 vertices percolates
    LabeledGraph h46 = wsat::saturator_clique_witness(4, 6).graph;
    CHECK(wsat::closure(k4(), h46) == LabeledGraph::clique(6));
}

TEST_CASE("is_weakly_saturated") {
    CHECK(wsat::is_weakly_saturated(k3(), LabeledGraph::path(4), 4));
    CHECK_FALSE(wsat::is_weakly_saturated(k4(), LabeledGraph(5), 5));
    CHECK_THROWS_AS(wsat::is_weakly_saturated(k3(), LabeledGraph::path(4), 5),
                    std::invalid_argument);

    // K_9 minus a perfect matching: one specific edge removal percolates with 31 edges
    PatternGraph k9(wsat::pattern_k9_minus_matching().graph);
    LabeledGraph h = k9.graph();
    h.remove_edge(0, 2);
    CHECK(h.edge_count() == 31);
    CHECK(wsat::is_weakly_saturated(k9, h, 9));
}

TEST_CASE("traces replay and use lex-smallest edges") {
    auto t = wsat::trace(k3(), LabeledGraph::path(5));
    CHECK(t.final == LabeledGraph::clique(5));
    CHECK(t.validate(k3()));
    REQUIRE(!t.steps.empty());
    CHECK(t.steps.front().edge == std::pair{0, 2});  // lex-smallest addable edge of the path

    auto t2 = wsat::trace(k4(), wsat::saturator_clique_witness(4, 6).graph);
    CHECK(t2.final == LabeledGraph::clique(6));
    CHECK(t2.validate(k4()));

    auto t3 = wsat::trace(k4(), LabeledGraph::clique(6));
    CHECK(t3.steps.empty());
    CHECK(t3.validate(k4()));

    // JSON lines: one object per step
    auto lines = t.to_json_lines();
    CHECK(std::count(lines.begin(), lines.end(), '\n') == static_cast<long>(t.steps.size()));
    CHECK(lines.find("\"edge\"") != std::string::npos);

    // a tampered trace fails validation
    auto bad = t;
    bad.steps.front().embedding[0] = bad.steps.front().embedding[1];
    CHECK_FALSE(bad.validate(k3()));
}

TEST_CASE("closure is order-independent, monotone and idempotent") {
    std::mt19937_64 rng(2024);
    for (int inst = 0; inst < 8; ++inst) {
        std::uniform_int_distribution<int> size(4, 7);
        const int n = size(rng);
        PatternGraph f = inst % 2 == 0 ? k3() : k4();
        LabeledGraph h = oracles::random_graph(rng, n, 0.45);
        LabeledGraph fix = wsat::closure(f, h);

        for (int rep = 0; rep < 10; ++rep)
            CHECK(wsat::closure_random_order(f, h, rng()) == fix);

        // monotone: add one random absent edge to get h2 containing h
        auto missing = h.non_edges();
        if (!missing.empty()) {
            LabeledGraph h2 = h;
            auto [u, v] = missing[std::uniform_int_distribution<std::size_t>(
                0, missing.size() - 1)(rng)];
            h2.add_edge(u, v);
            LabeledGraph fix2 = wsat::closure(f, h2);
            for (auto [a, b] : fix.edges()) CHECK(fix2.has_edge(a, b));
        }

        CHECK(wsat::closure(f, fix) == fix);
    }
}

TEST_CASE("weakly saturated hosts respect the degree floor") {
    std::mt19937_64 rng(99);
    int found = 0;
    while (found < 10) {
        std::uniform_int_distribution<int> size(4, 7);
        const int n = size(rng);
        PatternGraph f = found % 2 == 0 ? k3() : k4();
        if (f.vertex_count() > n) continue;
        LabeledGraph h = oracles::random_graph(rng, n, 0.5);
        if (!wsat::is_weakly_saturated(f, h, n)) continue;
        ++found;
        for (int u = 0; u < n; ++u) CHECK(h.degree(u) >= f.min_degree() - 1);
    }
}

TEST_CASE("parallel addable_edges matches the serial reference") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> size(5, 9);
        LabeledGraph h = oracles::random_graph(rng, size(rng), 0.4);
        PatternGraph f = trial % 2 == 0 ? k3() : k4();
        CHECK(wsat::addable_edges(f, h) == wsat::addable_edges_serial(f, h));
    }
}
