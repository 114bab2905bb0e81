#include "wsat/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <json.hpp>

#include "wsat/errors.hpp"

namespace wsat {

LabeledGraph::LabeledGraph(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                    std::to_string(kMaxVertices) + "]");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

LabeledGraph LabeledGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    LabeledGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

LabeledGraph LabeledGraph::clique(int n) {
    LabeledGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

LabeledGraph LabeledGraph::path(int n) {
    LabeledGraph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

LabeledGraph LabeledGraph::cycle(int n) {
    LabeledGraph g = path(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

void LabeledGraph::check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
}

bool LabeledGraph::has_edge(int u, int v) const {
    check_pair(u, v);
    return (row(u)[v / 64] >> (v % 64)) & 1u;
}

void LabeledGraph::add_edge(int u, int v) {
    if (has_edge(u, v)) throw std::invalid_argument("edge already present");
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    ++edge_count_;
}

void LabeledGraph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    --edge_count_;
}

int LabeledGraph::degree(int u) const {
    if (u < 0 || u >= n_) throw std::invalid_argument("vertex out of range");
    int d = 0;
    const std::uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for_each_neighbor(u, [&](int v) {
            if (v > u) out.emplace_back(u, v);
        });
    return out;
}

std::vector<std::pair<int, int>> LabeledGraph::non_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

bool LabeledGraph::is_complete() const {
    return edge_count_ == n_ * (n_ - 1) / 2;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const int> keep) {
    std::vector<int> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    LabeledGraph out(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (g.has_edge(sorted[i], sorted[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
    LabeledGraph out(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    const int off = a.vertex_count();
    for (auto [u, v] : b.edges()) out.add_edge(u + off, v + off);
    return out;
}

int min_degree(const LabeledGraph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("min_degree of empty graph");
    int best = g.degree(0);
    for (int u = 1; u < g.vertex_count(); ++u) best = std::min(best, g.degree(u));
    return best;
}

namespace {

int count_components(const LabeledGraph& g, int skip_u = -1, int skip_v = -1) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            g.for_each_neighbor(u, [&](int v) {
                if ((u == skip_u && v == skip_v) || (u == skip_v && v == skip_u)) return;
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            });
        }
    }
    return comps;
}

// Max-flow with unit edge capacities between s and t (Menger), BFS augmenting.
int edge_disjoint_paths(const LabeledGraph& g, int s, int t, int stop_at) {
    const int n = g.vertex_count();
    // residual capacities as a dense char matrix; n is small wherever this runs
    std::vector<char> cap(static_cast<std::size_t>(n) * n, 0);
    for (auto [u, v] : g.edges()) {
        cap[static_cast<std::size_t>(u) * n + v] = 1;
        cap[static_cast<std::size_t>(v) * n + u] = 1;
    }
    int flow = 0;
    std::vector<int> parent(n);
    while (flow < stop_at) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[s] = s;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size() && parent[t] < 0; ++qi) {
            int u = queue[qi];
            for (int v = 0; v < n; ++v)
                if (parent[v] < 0 && cap[static_cast<std::size_t>(u) * n + v]) {
                    parent[v] = u;
                    queue.push_back(v);
                }
        }
        if (parent[t] < 0) break;
        for (int v = t; v != s; v = parent[v]) {
            cap[static_cast<std::size_t>(parent[v]) * n + v] -= 1;
            cap[static_cast<std::size_t>(v) * n + parent[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace

bool is_connected(const LabeledGraph& g) {
    if (g.vertex_count() <= 1) return true;
    return count_components(g) == 1;
}

int component_count(const LabeledGraph& g) { return count_components(g); }

bool has_cut_edge(const LabeledGraph& g) {
    const int base = count_components(g);
    for (auto [u, v] : g.edges())
        if (count_components(g, u, v) > base) return true;
    return false;
}

int edge_connectivity(const LabeledGraph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("edge_connectivity requires n >= 2");
    if (!is_connected(g)) return 0;
    int best = n;  // above any possible cut
    for (int t = 1; t < n; ++t) best = std::min(best, edge_disjoint_paths(g, 0, t, best));
    return best;
}

std::string to_adjacency_json(const LabeledGraph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto arr = nlohmann::json::array();
    for (auto [u, v] : g.edges()) arr.push_back({u, v});
    j["edges"] = std::move(arr);
    return j.dump();
}

LabeledGraph from_adjacency_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("adjacency JSON must be {\"n\":int,\"edges\":[[u,v],...]}");
    LabeledGraph g(j["n"].get<int>());
    for (const auto& e : j["edges"]) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

} // namespace wsat
