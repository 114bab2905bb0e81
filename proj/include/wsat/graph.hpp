#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wsat {

/// Hard cap on graph order. Rows are bitsets of 64-bit words, so everything
/// stays cache-resident at desk scale; the exact solver never needs more.
inline constexpr int kMaxVertices = 512;

/// Simple undirected graph on {0..n-1} with bitset adjacency rows.
/// Symmetric, irreflexive; edge count cached. Immutable by convention once
/// handed to another component (all operations below copy).
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(int n);
    static LabeledGraph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static LabeledGraph clique(int n);
    static LabeledGraph path(int n);
    static LabeledGraph cycle(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int word_count() const { return words_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);     // throws std::invalid_argument if already present
    void remove_edge(int u, int v);  // throws std::invalid_argument if absent
    int degree(int u) const;

    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }

    std::vector<std::pair<int, int>> edges() const;              // lex order (min, max)
    std::vector<std::pair<int, int>> non_edges() const;          // lex order
    bool is_complete() const;

    template <typename Fn>
    void for_each_neighbor(int u, Fn&& fn) const {
        const std::uint64_t* r = row(u);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                fn(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    bool operator==(const LabeledGraph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

private:
    void check_pair(int u, int v) const;

    int n_ = 0;
    int words_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Subgraph induced on `keep`, relabeled order-preservingly to {0..|keep|-1}.
LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const int> keep);

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b);

int min_degree(const LabeledGraph& g);          // n >= 1
bool is_connected(const LabeledGraph& g);
int component_count(const LabeledGraph& g);
bool has_cut_edge(const LabeledGraph& g);       // some edge whose removal splits a component
int edge_connectivity(const LabeledGraph& g);   // 0 if disconnected; requires n >= 2

/// Secondary debug interchange format: {"n": int, "edges": [[u,v],...]}.
std::string to_adjacency_json(const LabeledGraph& g);
LabeledGraph from_adjacency_json(const std::string& text);

} // namespace wsat
