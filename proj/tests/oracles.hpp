#pragma once

// Test-only brute-force oracles. Each one recomputes a quantity by direct
// enumeration, independent of the library code path it is used to check.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsat/graph.hpp"

namespace oracles {

// e_i by per-size combination enumeration over vertex subsets.
inline std::vector<long long> e_vector(const wsat::LabeledGraph& g) {
    const int v = g.vertex_count();
    auto edges = g.edges();
    std::vector<long long> e(v + 1, 0);
    for (int i = 1; i <= v; ++i) {
        long long best = -1;
        std::vector<int> idx(i);
        for (int t = 0; t < i; ++t) idx[t] = t;
        while (true) {
            std::vector<char> in_s(v, 0);
            for (int x : idx) in_s[x] = 1;
            long long meet = 0;
            for (auto [a, b] : edges)
                if (in_s[a] || in_s[b]) ++meet;
            if (best < 0 || meet < best) best = meet;
            int t = i - 1;
            while (t >= 0 && idx[t] == v - i + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (int s = t + 1; s < i; ++s) idx[s] = idx[s - 1] + 1;
        }
        e[i] = best - 1;
    }
    return e;
}

// Composition minimum by explicit recursion over ordered parts <= cap.
inline long long gstar_bruteforce(const std::vector<long long>& e, int cap, int i) {
    if (i == 0) return 0;
    long long best = -1;
    for (int first = 1; first <= std::min(i, cap); ++first) {
        long long rest = gstar_bruteforce(e, cap, i - first);
        if (rest >= 0 && (best < 0 || e[first] + rest < best)) best = e[first] + rest;
    }
    return best;
}

// Membership in the indecomposable set by enumerating all partitions of i
// into >= 2 positive parts.
inline bool kset_member_bruteforce(const std::vector<long long>& e, int i) {
    std::vector<int> parts;
    bool decomposable = false;
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (decomposable) return;
        if (remaining == 0) {
            if (parts.size() >= 2) {
                long long total = 0;
                for (int p : parts) total += e[p];
                if (e[i] >= total) decomposable = true;
            }
            return;
        }
        for (int p = min_part; p <= remaining; ++p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, i, 1);
    return !decomposable;
}

inline int components_bruteforce(const wsat::LabeledGraph& g, int skip_u = -1, int skip_v = -1) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (comp[w] >= 0 || !g.has_edge(u, w)) continue;
                if ((u == skip_u && w == skip_v) || (u == skip_v && w == skip_u)) continue;
                comp[w] = c;
                stack.push_back(w);
            }
        }
        ++c;
    }
    return c;
}

inline bool has_cut_edge_bruteforce(const wsat::LabeledGraph& g) {
    const int base = components_bruteforce(g);
    for (auto [u, v] : g.edges())
        if (components_bruteforce(g, u, v) > base) return true;
    return false;
}

// Global min edge cut by enumerating all proper bipartitions (n <= 20).
inline int min_cut_bruteforce(const wsat::LabeledGraph& g) {
    const int n = g.vertex_count();
    auto edges = g.edges();
    int best = -1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
        int cross = 0;
        for (auto [u, v] : edges)
            if (((mask >> u) & 1) != ((mask >> v) & 1)) ++cross;
        if (best < 0 || cross < best) best = cross;
    }
    return best;
}

// Independent graph6 decoder: collects the full bit string first, then reads
// the upper triangle, structured differently from the library parser.
inline wsat::LabeledGraph decode_graph6_oracle(const std::string& s) {
    std::size_t pos = 0;
    long long n;
    if (s.at(0) == '~') {
        n = ((s.at(1) - 63) << 12) | ((s.at(2) - 63) << 6) | (s.at(3) - 63);
        pos = 4;
    } else {
        n = s.at(0) - 63;
        pos = 1;
    }
    std::vector<int> bits;
    for (; pos < s.size(); ++pos) {
        int w = s[pos] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((w >> b) & 1);
    }
    wsat::LabeledGraph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if (bits.at(k++)) g.add_edge(row, col);
    return g;
}

inline wsat::LabeledGraph random_graph(std::mt19937_64& rng, int n, double p) {
    wsat::LabeledGraph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

// Random graph with no isolated vertices, usable as a pattern.
inline wsat::LabeledGraph random_pattern(std::mt19937_64& rng, int n, double p) {
    while (true) {
        wsat::LabeledGraph g = random_graph(rng, n, p);
        if (g.edge_count() == 0) continue;
        bool isolated = false;
        for (int u = 0; u < n; ++u)
            if (g.degree(u) == 0) isolated = true;
        if (!isolated) return g;
    }
}

inline wsat::LabeledGraph random_connected(std::mt19937_64& rng, int n, double p) {
    while (true) {
        wsat::LabeledGraph g = random_pattern(rng, n, p);
        if (components_bruteforce(g) == 1) return g;
    }
}

} // namespace oracles
