#include "wsat/percolation.hpp"
#include <climits>

#include <random>
#include <stdexcept>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wsat {

namespace {

// Greedy search for a clique of size `need` containing the edge {u, v}.
// Sufficiency shortcut only: F embeds into any spanning clique with an F-edge
// mapped onto {u, v}. Returns the clique vertices (including u, v) or empty.
std::vector<int> greedy_clique_on(const LabeledGraph& g, int u, int v, int need) {
    const int W = g.word_count();
    std::vector<std::uint64_t> cand(W);
    const std::uint64_t* ru = g.row(u);
    const std::uint64_t* rv = g.row(v);
    for (int i = 0; i < W; ++i) cand[i] = ru[i] & rv[i];
    std::vector<int> clique{u, v};
    while (static_cast<int>(clique.size()) < need) {
        int c = -1;
        for (int i = 0; i < W && c < 0; ++i)
            if (cand[i]) c = i * 64 + __builtin_ctzll(cand[i]);
        if (c < 0) return {};
        clique.push_back(c);
        const std::uint64_t* rc = g.row(c);
        for (int i = 0; i < W; ++i) cand[i] &= rc[i];
    }
    return clique;
}

// Embedding of F into a clique found by greedy_clique_on, with the first
// F-edge mapped onto {u, v}.
std::optional<Embedding> clique_embedding(const PatternGraph& f, const LabeledGraph& g, int u,
                                          int v) {
    auto clique = greedy_clique_on(g, u, v, f.vertex_count());
    if (clique.empty()) return std::nullopt;
    auto [a, b] = f.graph().edges().front();
    Embedding out(f.vertex_count(), -1);
    out[a] = u;
    out[b] = v;
    std::size_t next = 2;
    for (int w = 0; w < f.vertex_count(); ++w)
        if (w != a && w != b) out[w] = clique[next++];
    return out;
}

// Shared closure driver. Candidate tests run under a node budget so genuinely
// hard refutations are deferred while cheap additions densify the host (which
// in turn makes the deferred candidates easy). Budgets escalate when nothing
// else moves, and the fixpoint is certified by a final exact full pass
// (required for correctness: a new copy of a disconnected F may appear far
// from the last added edge).
LabeledGraph closure_impl(const PatternGraph& f, const LabeledGraph& h, bool stop_when_complete) {
    LabeledGraph g = h;
    EmbeddingFinder finder(f);
    auto missing = g.non_edges();
    std::vector<char> alive(missing.size(), 1);
    std::vector<char> pending(missing.size(), 1);
    Embedding scratch;

    auto mark_near = [&](int u, int v) {
        // non-edges within distance 2 of the new edge: endpoint in N[u] or N[v]
        std::vector<char> near(g.vertex_count(), 0);
        near[u] = near[v] = 1;
        g.for_each_neighbor(u, [&](int x) { near[x] = 1; });
        g.for_each_neighbor(v, [&](int x) { near[x] = 1; });
        for (std::size_t k = 0; k < missing.size(); ++k)
            if (alive[k] && (near[missing[k].first] || near[missing[k].second])) pending[k] = 1;
    };

    long long budget = 4096;
    while (!g.is_complete()) {
        bool added = false;
        bool deferred = false;
        for (std::size_t k = 0; k < missing.size(); ++k) {
            if (!alive[k] || !pending[k]) continue;
            auto [u, v] = missing[k];
            g.add_edge(u, v);
            FindStatus s = finder.find_budgeted(g, u, v, budget, scratch);
            if (s == FindStatus::found) {
                alive[k] = 0;
                added = true;
                mark_near(u, v);
                if (stop_when_complete && g.is_complete()) return g;
            } else {
                g.remove_edge(u, v);
                if (s == FindStatus::refuted)
                    pending[k] = 0;  // exact refutation; retest only near new edges
                else
                    deferred = true;  // stays pending
            }
        }
        if (added) continue;
        if (deferred) {
            budget = budget > (1LL << 40) ? LLONG_MAX : budget * 8;
            continue;
        }
        // nothing pending decided differently: certify the fixpoint exactly
        bool any = false;
        for (std::size_t k = 0; k < missing.size(); ++k) {
            if (!alive[k]) continue;
            auto [u, v] = missing[k];
            g.add_edge(u, v);
            if (finder.find(g, u, v)) {
                alive[k] = 0;
                any = true;
                mark_near(u, v);
                if (stop_when_complete && g.is_complete()) return g;
            } else {
                g.remove_edge(u, v);
            }
        }
        if (!any) break;
    }
    return g;
}

} // namespace

std::vector<std::pair<int, int>> addable_edges_serial(const PatternGraph& f,
                                                      const LabeledGraph& h) {
    EmbeddingFinder finder(f);
    std::vector<std::pair<int, int>> out;
    LabeledGraph scratch = h;
    for (auto [u, v] : h.non_edges()) {
        scratch.add_edge(u, v);
        if (finder.find(scratch, u, v)) out.emplace_back(u, v);
        scratch.remove_edge(u, v);
    }
    return out;
}

std::vector<std::pair<int, int>> addable_edges(const PatternGraph& f, const LabeledGraph& h) {
    auto candidates = h.non_edges();
#ifdef _OPENMP
    if (candidates.size() >= 16 && omp_get_max_threads() > 1) {
        EmbeddingFinder finder(f);
        std::vector<char> hit(candidates.size(), 0);
#pragma omp parallel
        {
            LabeledGraph scratch = h;
#pragma omp for schedule(dynamic, 4)
            for (long k = 0; k < static_cast<long>(candidates.size()); ++k) {
                auto [u, v] = candidates[k];
                scratch.add_edge(u, v);
                if (finder.find(scratch, u, v)) hit[k] = 1;
                scratch.remove_edge(u, v);
            }
        }
        std::vector<std::pair<int, int>> out;
        for (std::size_t k = 0; k < candidates.size(); ++k)
            if (hit[k]) out.push_back(candidates[k]);
        return out;
    }
#endif
    return addable_edges_serial(f, h);
}

LabeledGraph closure(const PatternGraph& f, const LabeledGraph& h) {
    return closure_impl(f, h, false);
}

bool is_weakly_saturated(const PatternGraph& f, const LabeledGraph& h, int n) {
    if (h.vertex_count() != n)
        throw std::invalid_argument("is_weakly_saturated: host has wrong vertex count");
    return closure_impl(f, h, true).is_complete();
}

PercolationTrace trace(const PatternGraph& f, const LabeledGraph& h) {
    PercolationTrace t;
    t.start = h;
    LabeledGraph g = h;
    EmbeddingFinder finder(f);
    while (true) {
        bool found = false;
        for (auto [u, v] : g.non_edges()) {
            g.add_edge(u, v);
            if (auto emb = finder.find(g, u, v)) {
                t.steps.push_back({{u, v}, *emb});
                found = true;
                break;
            }
            g.remove_edge(u, v);
        }
        if (!found) break;
    }
    t.final = g;
    return t;
}

LabeledGraph closure_random_order(const PatternGraph& f, const LabeledGraph& h,
                                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    LabeledGraph g = h;
    EmbeddingFinder finder(f);
    while (true) {
        std::vector<std::pair<int, int>> options;
        LabeledGraph scratch = g;
        for (auto [u, v] : g.non_edges()) {
            scratch.add_edge(u, v);
            if (finder.find(scratch, u, v)) options.emplace_back(u, v);
            scratch.remove_edge(u, v);
        }
        if (options.empty()) break;
        auto [u, v] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        g.add_edge(u, v);
    }
    return g;
}

bool PercolationTrace::validate(const PatternGraph& f) const {
    LabeledGraph g = start;
    const auto fedges = f.graph().edges();
    for (const auto& step : steps) {
        auto [u, v] = step.edge;
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v) return false;
        if (g.has_edge(u, v)) return false;  // steps must strictly grow the graph
        g.add_edge(u, v);
        const Embedding& phi = step.embedding;
        if (static_cast<int>(phi.size()) != f.vertex_count()) return false;
        std::vector<char> seen(g.vertex_count(), 0);
        for (int img : phi) {
            if (img < 0 || img >= g.vertex_count() || seen[img]) return false;
            seen[img] = 1;
        }
        bool covers = false;
        for (auto [a, b] : fedges) {
            if (!g.has_edge(phi[a], phi[b])) return false;  // edge-preserving
            if ((phi[a] == u && phi[b] == v) || (phi[a] == v && phi[b] == u)) covers = true;
        }
        if (!covers) return false;  // the copy must use the new edge
    }
    return g == final;
}

std::string PercolationTrace::to_json_lines() const {
    std::string out;
    for (const auto& step : steps) {
        nlohmann::json j;
        j["edge"] = {step.edge.first, step.edge.second};
        j["embedding"] = step.embedding;
        out += j.dump();
        out += '\n';
    }
    return out;
}

} // namespace wsat
