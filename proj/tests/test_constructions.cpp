#include <doctest.h>

#include "wsat/constructions.hpp"
#include "wsat/invariants.hpp"
#include "wsat/percolation.hpp"
#include "wsat/rational.hpp"

using wsat::LabeledGraph;
using wsat::PatternGraph;
using wsat::Rational;

namespace {

Rational slope_at(const wsat::ConstructionResult& fam) {
    std::vector<int> rest;
    std::vector<char> in_p(fam.graph.vertex_count(), 0);
    for (int p : fam.distinguished) in_p[p] = 1;
    for (int u = 0; u < fam.graph.vertex_count(); ++u)
        if (!in_p[u]) rest.push_back(u);
    auto sub = wsat::induced_subgraph(fam.graph, rest);
    return {fam.graph.edge_count() - sub.edge_count() - 1,
            static_cast<long long>(fam.distinguished.size())};
}

} // namespace

TEST_CASE("F_{v,delta} pattern") {
    auto c = wsat::pattern_F_v_delta(5, 3);
    PatternGraph f(c.graph);
    CHECK(f.vertex_count() == 5);
    CHECK(f.edge_count() == 9);
    CHECK(f.min_degree() == 3);

    auto c42 = wsat::pattern_F_v_delta(4, 2);
    CHECK(c42.claimed_edges == 5);

    CHECK_THROWS_AS(wsat::pattern_F_v_delta(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(wsat::pattern_F_v_delta(2, 1), std::invalid_argument);
}

TEST_CASE("F_{a,b,c} pattern") {
    auto c = wsat::pattern_F_abc(3, 4, 2);
    CHECK(c.graph.vertex_count() == 7);
    CHECK(c.claimed_edges == 11);

    auto c554 = wsat::pattern_F_abc(5, 5, 4);
    CHECK(c554.graph.vertex_count() == 10);
    CHECK(c554.claimed_edges == 24);

    auto c231 = wsat::pattern_F_abc(2, 3, 1);
    CHECK(c231.graph.vertex_count() == 5);
    CHECK(c231.claimed_edges == 5);

    CHECK_THROWS_AS(wsat::pattern_F_abc(4, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(wsat::pattern_F_abc(3, 4, 0), std::invalid_argument);
}

TEST_CASE("optimality families: counts, degrees and slopes") {
    {
        auto c = wsat::pattern_optimality_family(1, 2, 3);
        PatternGraph f(c.graph);
        CHECK(f.vertex_count() == 9);
        CHECK(f.edge_count() == 10);
        CHECK(f.min_degree() == 2);
        CHECK_FALSE(f.connected());
        CHECK(slope_at(c) == Rational(2, 3));  // delta/2 - 1/(delta+1)
    }
    {
        auto c = wsat::pattern_optimality_family(2, 2, 7);
        PatternGraph f(c.graph);
        CHECK(f.edge_count() == 30);
        CHECK(f.min_degree() == 2);
        CHECK(f.two_edge_connected());
        CHECK(slope_at(c) == Rational(1));  // delta/2
    }
    {
        auto c = wsat::pattern_optimality_family(3, 3, 6);
        PatternGraph f(c.graph);
        CHECK(f.edge_count() == 32);
        CHECK(f.vertex_count() == 16);
        CHECK(f.min_degree() == 3);
        CHECK(f.connected());
        CHECK_FALSE(f.two_edge_connected());
        CHECK(slope_at(c) == Rational(3, 2) - Rational(1, 10));
    }
    CHECK_THROWS_AS(wsat::pattern_optimality_family(1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(wsat::pattern_optimality_family(3, 2, 9), std::invalid_argument);
    CHECK_THROWS_AS(wsat::pattern_optimality_family(4, 2, 5), std::invalid_argument);
}

TEST_CASE("s-sequences are the unique staircases at small delta") {
    CHECK(wsat::s_sequence(3, 2) == std::vector<int>{0, 0, 1, 2});
    CHECK(wsat::s_sequence(2, 0) == std::vector<int>{0, 0, 1});
    CHECK(wsat::s_sequence(3, 0) == std::vector<int>{0, 0, 0, 1});
    CHECK(wsat::s_sequence(3, 1) == std::vector<int>{0, 0, 1, 1});
    CHECK_THROWS_AS(wsat::s_sequence(2, 1), std::invalid_argument);

    // enumeration oracle: all nondecreasing step-at-most-one sequences with
    // s_1 = s_2 = 0 summing to k+1
    for (int delta : {2, 3}) {
        for (int k = 0; 2 * k <= (delta - 2) * (delta + 1); ++k) {
            std::vector<std::vector<int>> all;
            std::vector<int> cur;
            auto rec = [&](auto&& self, int i, int total) -> void {
                if (i == delta + 1) {
                    if (total == k + 1) all.push_back(cur);
                    return;
                }
                int lo = i < 2 ? 0 : cur.back();
                int hi = i < 2 ? 0 : cur.back() + 1;
                for (int s = lo; s <= hi; ++s) {
                    cur.push_back(s);
                    self(self, i + 1, total + s);
                    cur.pop_back();
                }
            };
            rec(rec, 0, 0);
            REQUIRE(all.size() == 1);  // uniqueness holds in this range
            CHECK(wsat::s_sequence(delta, k) == all.front());
        }
    }
}

TEST_CASE("non-concentration family") {
    auto c = wsat::pattern_nonconcentration(3, 2, 8);
    PatternGraph f(c.graph);
    CHECK(f.vertex_count() == 12);
    CHECK(f.edge_count() == 37);
    CHECK(f.min_degree() == 3);
    CHECK(f.connected());
    CHECK(c.s_sequence == std::vector<int>{0, 0, 1, 2});
    CHECK(slope_at(c) == Rational(3, 2) + Rational(2, 4));

    auto small = wsat::pattern_nonconcentration(2, 0, 5);
    PatternGraph fs(small.graph);
    CHECK(fs.vertex_count() == 8);
    CHECK(fs.edge_count() == 14);
    CHECK(wsat::flatness(fs).flat);
    CHECK(wsat::gamma(wsat::edge_deficiency(fs)) == Rational(1));

    CHECK_THROWS_AS(wsat::pattern_nonconcentration(3, 2, 5), std::invalid_argument);
}

TEST_CASE("k9 minus matching pattern") {
    auto c = wsat::pattern_k9_minus_matching();
    PatternGraph f(c.graph);
    CHECK(f.vertex_count() == 9);
    CHECK(f.edge_count() == 32);
    CHECK(f.min_degree() == 7);
    CHECK(c.distinguished == std::vector<int>{0, 2, 4, 6});
    // the single ends induce a clique
    CHECK(wsat::induced_subgraph(c.graph, c.distinguished) == LabeledGraph::clique(4));
}

TEST_CASE("sparse growth saturators") {
    PatternGraph k4(LabeledGraph::clique(4));
    auto c = wsat::saturator_sparse_growth(k4, {0}, 3);
    CHECK(c.graph.vertex_count() == 7);
    CHECK(c.claimed_edges == 11);  // 5 + 3 * 2 = 2n - 3
    CHECK(wsat::verify_weakly_saturated(c));

    PatternGraph k3(LabeledGraph::clique(3));
    auto c3 = wsat::saturator_sparse_growth(k3, {0}, 4);
    CHECK(c3.graph.vertex_count() == 7);
    CHECK(c3.claimed_edges == 6);  // n - 1
    CHECK(wsat::verify_weakly_saturated(c3));

    // the compensating-edge regime: |V\P| = delta - 2
    PatternGraph k9(wsat::pattern_k9_minus_matching().graph);
    auto g1 = wsat::saturator_sparse_growth(k9, {0, 2, 4, 6}, 1);
    CHECK(g1.graph.vertex_count() == 13);
    CHECK(g1.claimed_edges == 31 + 22);
    CHECK(g1.params.at("per_step") == 22);
    CHECK(wsat::verify_weakly_saturated(g1));

    CHECK_THROWS_AS(wsat::saturator_sparse_growth(k9, {0, 2, 4, 6, 8}, 1),
                    std::invalid_argument);  // |V\P| = 4 < delta - 2
}

TEST_CASE("gstar witness saturators") {
    PatternGraph k4(LabeledGraph::clique(4));
    auto c = wsat::saturator_gstar_witness(k4, 7);
    CHECK(c.claimed_edges == 11);
    CHECK(wsat::verify_weakly_saturated(c));

    PatternGraph k3(LabeledGraph::clique(3));
    auto c3 = wsat::saturator_gstar_witness(k3, 6);
    CHECK(c3.claimed_edges == 5);
    CHECK(wsat::verify_weakly_saturated(c3));

    PatternGraph f342(wsat::pattern_F_abc(3, 4, 2).graph);
    auto c342 = wsat::saturator_gstar_witness(f342, 10);
    CHECK(c342.claimed_edges == 13);  // g*_2(3) + 10
    CHECK(wsat::verify_weakly_saturated(c342));

    PatternGraph c5(LabeledGraph::cycle(5));
    CHECK_THROWS_AS(wsat::saturator_gstar_witness(c5, 7), std::invalid_argument);  // not flat
}

TEST_CASE("clique witnesses") {
    auto c46 = wsat::saturator_clique_witness(4, 6);
    CHECK(c46.claimed_edges == 9);
    CHECK(wsat::verify_weakly_saturated(c46));

    auto c35 = wsat::saturator_clique_witness(3, 5);
    CHECK(c35.claimed_edges == 4);  // the star
    CHECK(wsat::verify_weakly_saturated(c35));

    auto c57 = wsat::saturator_clique_witness(5, 7);
    CHECK(c57.claimed_edges == 15);
    CHECK(wsat::verify_weakly_saturated(c57));
}

TEST_CASE("degree growth saturators") {
    PatternGraph f53(wsat::pattern_F_v_delta(5, 3).graph);
    auto c = wsat::saturator_degree_growth(f53, 7);
    CHECK(c.claimed_edges == 12);
    CHECK(wsat::verify_weakly_saturated(c));

    PatternGraph c5(LabeledGraph::cycle(5));  // not flat: crude clique base
    auto cc = wsat::saturator_degree_growth(c5, 6);
    CHECK(cc.claimed_edges == 10);
    CHECK(wsat::verify_weakly_saturated(cc));
}

TEST_CASE("union glue") {
    PatternGraph k3(LabeledGraph::clique(3));
    auto cross = wsat::saturator_union_glue(LabeledGraph::path(3), LabeledGraph::path(4), k3,
                                            wsat::GlueVariant::cross_join);
    CHECK(cross.graph.vertex_count() == 7);
    CHECK(cross.claimed_edges == 2 + 3 + 1);
    CHECK(wsat::verify_weakly_saturated(cross));

    PatternGraph k4(LabeledGraph::clique(4));
    auto a = wsat::saturator_clique_witness(4, 5).graph;
    auto b = wsat::saturator_clique_witness(4, 6).graph;
    auto cross2 = wsat::saturator_union_glue(a, b, k4, wsat::GlueVariant::cross_join);
    CHECK(cross2.claimed_edges == a.edge_count() + b.edge_count() + 4);
    CHECK(wsat::verify_weakly_saturated(cross2));

    auto overlap = wsat::saturator_union_glue(LabeledGraph::path(5), LabeledGraph::path(4), k3,
                                              wsat::GlueVariant::overlap);
    CHECK(overlap.graph.vertex_count() == 6);
    CHECK(overlap.claimed_edges == 4 + 3 - 2);  // saves l - 1
    CHECK(wsat::verify_weakly_saturated(overlap));
}

TEST_CASE("claim records are valid JSON with a graph6 payload") {
    auto c = wsat::pattern_nonconcentration(3, 2, 8);
    const std::string j = wsat::claim_json(c);
    CHECK(j.find("\"graph6\"") != std::string::npos);
    CHECK(j.find("\"s_sequence\"") != std::string::npos);
    CHECK(j.find("pattern-family") != std::string::npos);
}
