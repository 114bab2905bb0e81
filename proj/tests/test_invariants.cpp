#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wsat/constructions.hpp"
#include "wsat/errors.hpp"
#include "wsat/invariants.hpp"
#include "wsat/percolation.hpp"

using wsat::LabeledGraph;
using wsat::PatternGraph;

namespace {

std::vector<long long> evec(const PatternGraph& f) { return wsat::edge_deficiency(f).e; }

PatternGraph k9mm() { return PatternGraph(wsat::pattern_k9_minus_matching().graph); }

} // namespace

TEST_CASE("edge deficiency vectors of the corpus") {
    CHECK(evec(PatternGraph(LabeledGraph::clique(3))) == std::vector<long long>{0, 1, 2, 2});
    CHECK(evec(PatternGraph(LabeledGraph::clique(4))) == std::vector<long long>{0, 2, 4, 5, 5});
    CHECK(evec(PatternGraph(LabeledGraph::cycle(5))) == std::vector<long long>{0, 1, 2, 3, 4, 4});
    CHECK(evec(PatternGraph(wsat::pattern_F_v_delta(5, 3).graph)) ==
          std::vector<long long>{0, 2, 5, 7, 8, 8});
    CHECK(evec(PatternGraph(wsat::pattern_F_abc(3, 4, 2).graph)) ==
          std::vector<long long>{0, 1, 3, 4, 7, 9, 10, 10});
    CHECK(evec(k9mm()) == std::vector<long long>{0, 6, 12, 17, 21, 25, 28, 30, 31, 31});
    CHECK(evec(PatternGraph(wsat::pattern_F_abc(5, 5, 4).graph)) ==
          std::vector<long long>{0, 3, 7, 10, 12, 13, 17, 20, 22, 23, 23});
}

TEST_CASE("edge deficiency matches the per-size enumeration oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> size(2, 9);
        LabeledGraph g = oracles::random_pattern(rng, size(rng), 0.5);
        PatternGraph f(g);
        auto got = wsat::edge_deficiency(f);
        auto want = oracles::e_vector(g);
        CHECK(got.e == want);
        // invariants: e_0 = 0, e_1 = delta-1, e_v = l-1, nondecreasing
        CHECK(got.e[0] == 0);
        CHECK(got.e[1] == f.min_degree() - 1);
        CHECK(got.e[f.vertex_count()] == f.edge_count() - 1);
        for (int i = 0; i < f.vertex_count(); ++i) CHECK(got.e[i] <= got.e[i + 1]);
    }
}

TEST_CASE("serial, parallel and dispatching e-vector kernels agree") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> size(2, 12);
        PatternGraph f(oracles::random_pattern(rng, size(rng), 0.5));
        auto a = wsat::edge_deficiency_serial(f);
        auto b = wsat::edge_deficiency_parallel(f);
        auto c = wsat::edge_deficiency(f);
        CHECK(a.e == b.e);
        CHECK(a.e == c.e);
    }
}

TEST_CASE("capacity cap on subset enumeration") {
    PatternGraph big(LabeledGraph::clique(25));
    CHECK_THROWS_AS(wsat::edge_deficiency(big), wsat::CapacityError);
    CHECK_THROWS_AS(wsat::beta(big), wsat::CapacityError);
}

TEST_CASE("gamma values and argmin") {
    auto edk3 = wsat::edge_deficiency(PatternGraph(LabeledGraph::clique(3)));
    CHECK(wsat::gamma(edk3) == wsat::Rational(1));
    CHECK(wsat::gamma_argmin(edk3) == 1);

    auto edk4 = wsat::edge_deficiency(PatternGraph(LabeledGraph::clique(4)));
    CHECK(wsat::gamma(edk4) == wsat::Rational(5, 3));
    CHECK(wsat::gamma_argmin(edk4) == 3);

    CHECK(wsat::gamma(wsat::edge_deficiency(k9mm())) == wsat::Rational(31, 8));
}

TEST_CASE("gamma three-case lower bounds on random patterns") {
    std::mt19937_64 rng(33);
    int tested = 0;
    while (tested < 40) {
        std::uniform_int_distribution<int> size(3, 8);
        LabeledGraph g = oracles::random_pattern(rng, size(rng), 0.55);
        PatternGraph f(g);
        const int d = f.min_degree();
        if (d < 2) continue;
        ++tested;
        wsat::Rational gm = wsat::gamma(wsat::edge_deficiency(f));
        CHECK(gm >= wsat::Rational(d, 2) - wsat::Rational(1, d + 1));
        if ((d % 2 == 0 && f.connected()) || f.two_edge_connected())
            CHECK(gm >= wsat::Rational(d, 2));
        if (d % 2 == 1 && f.connected())
            CHECK(gm >= wsat::Rational(d, 2) - wsat::Rational(1, 2 * (d + 2)));
    }
}

TEST_CASE("gstar tables") {
    auto edk4 = wsat::edge_deficiency(PatternGraph(LabeledGraph::clique(4)));
    CHECK(wsat::gstar_table(edk4, 2, 5) == std::vector<long long>{0, 2, 4, 6, 8, 10});
    CHECK(wsat::gstar_table(edk4, 1, 6) == std::vector<long long>{0, 2, 4, 5, 7, 9, 10});

    auto edk3 = wsat::edge_deficiency(PatternGraph(LabeledGraph::clique(3)));
    auto t = wsat::gstar_table(edk3, 1, 6);
    for (int i = 0; i <= 6; ++i) CHECK(t[i] == i);

    CHECK_THROWS_AS(wsat::gstar_table(edk4, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(wsat::gstar_table(edk4, -1, 3), std::invalid_argument);
}

TEST_CASE("gstar DP equals the composition enumeration oracle and is monotone in r") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<int> size(2, 8);
        PatternGraph f(oracles::random_pattern(rng, size(rng), 0.5));
        auto ed = wsat::edge_deficiency(f);
        const int v = f.vertex_count();
        std::vector<std::vector<long long>> tables;
        for (int r = 0; r <= v - 1; ++r) {
            auto table = wsat::gstar_table(ed, r, 12);
            for (int i = 0; i <= 12; ++i)
                CHECK(table[i] == oracles::gstar_bruteforce(ed.e, v - r, i));
            tables.push_back(table);
        }
        for (std::size_t r = 1; r < tables.size(); ++r)
            for (int i = 0; i <= 12; ++i) CHECK(tables[r - 1][i] <= tables[r][i]);
    }
}

TEST_CASE("kset values and oracle agreement") {
    auto edk3 = wsat::edge_deficiency(PatternGraph(LabeledGraph::clique(3)));
    CHECK(wsat::kset(edk3) == std::vector<int>{1, 3});

    auto edk4 = wsat::edge_deficiency(PatternGraph(LabeledGraph::clique(4)));
    CHECK(wsat::kset(edk4) == std::vector<int>{1, 3, 4});
    CHECK(wsat::kset_r(edk4, 2) == std::vector<int>{1});

    auto ed554 = wsat::edge_deficiency(PatternGraph(wsat::pattern_F_abc(5, 5, 4).graph));
    auto k2 = wsat::kset_r(ed554, 2);
    REQUIRE(!k2.empty());
    CHECK(k2.back() == 5);

    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 15; ++trial) {
        std::uniform_int_distribution<int> size(2, 9);
        PatternGraph f(oracles::random_pattern(rng, size(rng), 0.5));
        auto ed = wsat::edge_deficiency(f);
        auto got = wsat::kset(ed);
        for (int i = 1; i <= std::min(f.vertex_count(), 12); ++i) {
            bool member = std::find(got.begin(), got.end(), i) != got.end();
            CHECK(member == oracles::kset_member_bruteforce(ed.e, i));
        }
        CHECK(!got.empty());
        CHECK(got.front() == 1);  // 1 has no >= 2-part decomposition
    }
}

TEST_CASE("beta values") {
    CHECK(wsat::beta(PatternGraph(LabeledGraph::clique(2))) == 0);
    CHECK(wsat::beta(PatternGraph(LabeledGraph::clique(4))) == 2);
    CHECK(wsat::beta(k9mm()) == 6);
    CHECK(wsat::beta(PatternGraph(wsat::pattern_F_abc(5, 5, 4).graph)) == 3);
    CHECK(wsat::beta(PatternGraph(LabeledGraph::path(3))) == 0);

    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> size(2, 8);
        PatternGraph f(oracles::random_pattern(rng, size(rng), 0.5));
        CHECK(wsat::beta_serial(f) == wsat::beta_parallel(f));
        CHECK(wsat::beta(f) <= f.vertex_count() - 2);
    }
}

TEST_CASE("flatness decisions") {
    auto flat_k3 = wsat::flatness(PatternGraph(LabeledGraph::clique(3)));
    CHECK(flat_k3.flat);
    REQUIRE(flat_k3.witness.has_value());

    CHECK(wsat::flatness(PatternGraph(wsat::pattern_F_abc(3, 4, 2).graph)).flat);
    CHECK_FALSE(wsat::flatness(PatternGraph(LabeledGraph::cycle(5))).flat);

    // disjoint union of two triangles is stuck after restoring the one edge
    LabeledGraph two = wsat::disjoint_union(LabeledGraph::clique(3), LabeledGraph::clique(3));
    CHECK_FALSE(wsat::flatness(PatternGraph(two)).flat);

    auto flat_k9 = wsat::flatness(k9mm());
    CHECK(flat_k9.flat);
    REQUIRE(flat_k9.witness.has_value());
    LabeledGraph h = k9mm().graph();
    h.remove_edge(flat_k9.witness->first, flat_k9.witness->second);
    CHECK(wsat::is_weakly_saturated(k9mm(), h, 9));
}

TEST_CASE("bound profile JSON carries the headline facts") {
    auto profile = wsat::build_profile(k9mm());
    CHECK(profile.beta == 6);
    CHECK(profile.flat);
    CHECK(profile.l - 1 == 31);
    const std::string j = wsat::to_json(profile);
    CHECK(j.find("\"beta\":6") != std::string::npos);
    CHECK(j.find("\"flat\":true") != std::string::npos);
    CHECK(j.find("\"num\":31") != std::string::npos);  // gamma = 31/8
    CHECK(j.find("\"den\":8") != std::string::npos);
}
