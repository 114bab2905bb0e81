#include "wsat/invariants.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "wsat/errors.hpp"
#include "wsat/percolation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wsat {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

std::vector<std::uint32_t> adjacency_masks(const PatternGraph& f) {
    const int v = f.vertex_count();
    if (v > kSubsetEnumCap)
        throw CapacityError("subset enumeration capped at v <= " +
                            std::to_string(kSubsetEnumCap) + " (got v = " + std::to_string(v) + ")");
    std::vector<std::uint32_t> adj(v, 0);
    for (auto [a, b] : f.graph().edges()) {
        adj[a] |= std::uint32_t{1} << b;
        adj[b] |= std::uint32_t{1} << a;
    }
    return adj;
}

// Walks all subsets of the `low` lowest bits on top of a fixed high part in
// Gray-code order, maintaining |S| and the count of edges meeting S, and
// folding per-size minima into `min_meet`.
void gray_walk(const std::vector<std::uint32_t>& adj, const std::vector<int>& deg,
               std::uint32_t high, int low, std::vector<long long>& min_meet) {
    std::uint32_t cur = high;
    int size = std::popcount(cur);
    // cnt(S) = sum of degrees over S minus edges inside S
    long long cnt = 0;
    {
        long long sum = 0, inside = 0;
        for (std::uint32_t u = cur; u;) {
            int b = std::countr_zero(u);
            u &= u - 1;
            sum += deg[b];
            inside += std::popcount(adj[b] & cur);
        }
        cnt = sum - inside / 2;
    }
    if (size > 0) min_meet[size] = std::min(min_meet[size], cnt);

    const std::uint64_t total = std::uint64_t{1} << low;
    for (std::uint64_t k = 1; k < total; ++k) {
        int b = std::countr_zero(k);
        std::uint32_t bit = std::uint32_t{1} << b;
        if (cur & bit) {
            cur ^= bit;
            cnt -= deg[b] - std::popcount(adj[b] & cur);
            --size;
        } else {
            cnt += deg[b] - std::popcount(adj[b] & cur);
            cur ^= bit;
            ++size;
        }
        if (cnt < min_meet[size]) min_meet[size] = cnt;
    }
}

EdgeDeficiencyVector from_min_meet(int v, const std::vector<long long>& min_meet) {
    EdgeDeficiencyVector ed;
    ed.v = v;
    ed.e.assign(v + 1, 0);
    for (int i = 1; i <= v; ++i) ed.e[i] = min_meet[i] - 1;
    return ed;
}

} // namespace

EdgeDeficiencyVector edge_deficiency_serial(const PatternGraph& f) {
    const int v = f.vertex_count();
    auto adj = adjacency_masks(f);
    std::vector<int> deg(v);
    for (int u = 0; u < v; ++u) deg[u] = std::popcount(adj[u]);
    std::vector<long long> min_meet(v + 1, kInf);
    gray_walk(adj, deg, 0, v, min_meet);
    return from_min_meet(v, min_meet);
}

EdgeDeficiencyVector edge_deficiency_parallel(const PatternGraph& f) {
    const int v = f.vertex_count();
    auto adj = adjacency_masks(f);
    std::vector<int> deg(v);
    for (int u = 0; u < v; ++u) deg[u] = std::popcount(adj[u]);

    const int high_bits = std::min(6, v);
    const int low = v - high_bits;
    const int blocks = 1 << high_bits;
    std::vector<long long> min_meet(v + 1, kInf);
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<long long> local(v + 1, kInf);
#pragma omp for schedule(dynamic)
        for (int b = 0; b < blocks; ++b)
            gray_walk(adj, deg, static_cast<std::uint32_t>(b) << low, low, local);
#pragma omp critical
        for (int i = 0; i <= v; ++i) min_meet[i] = std::min(min_meet[i], local[i]);
    }
#else
    for (int b = 0; b < blocks; ++b)
        gray_walk(adj, deg, static_cast<std::uint32_t>(b) << low, low, min_meet);
#endif
    return from_min_meet(v, min_meet);
}

EdgeDeficiencyVector edge_deficiency(const PatternGraph& f) {
#ifdef _OPENMP
    if (f.vertex_count() >= 18 && omp_get_max_threads() > 1) return edge_deficiency_parallel(f);
#endif
    return edge_deficiency_serial(f);
}

Rational gamma(const EdgeDeficiencyVector& ed) {
    if (ed.v < 2) throw std::invalid_argument("gamma requires v >= 2");
    Rational best(ed.e[1], 1);
    for (int i = 2; i <= ed.v - 1; ++i) {
        Rational r(ed.e[i], i);
        if (r < best) best = r;
    }
    return best;
}

int gamma_argmin(const EdgeDeficiencyVector& ed) {
    Rational best = gamma(ed);
    for (int i = 1; i <= ed.v - 1; ++i)
        if (Rational(ed.e[i], i) == best) return i;
    return 1;
}

std::vector<long long> gstar_table(const EdgeDeficiencyVector& ed, int r, int i_max) {
    if (r < 0 || r > ed.v - 1)
        throw std::invalid_argument("gstar_table requires 0 <= r <= v-1");
    const int cap = ed.v - r;
    std::vector<long long> a(i_max + 1, 0);
    for (int i = 1; i <= i_max; ++i) {
        long long best = kInf;
        for (int j = 1; j <= std::min(i, cap); ++j) best = std::min(best, ed.e[j] + a[i - j]);
        a[i] = best;
    }
    return a;
}

std::vector<int> kset(const EdgeDeficiencyVector& ed) {
    const int v = ed.v;
    std::vector<long long> decomp(v + 1, kInf);  // best value over >= 2 parts
    std::vector<long long> best(v + 1, kInf);    // best over >= 1 part
    std::vector<int> out;
    for (int i = 1; i <= v; ++i) {
        for (int j = 1; j < i; ++j)
            decomp[i] = std::min(decomp[i], ed.e[j] + best[i - j]);
        best[i] = std::min(ed.e[i], decomp[i]);
        if (ed.e[i] < decomp[i]) out.push_back(i);
    }
    return out;
}

std::vector<int> kset_r(const EdgeDeficiencyVector& ed, int r) {
    std::vector<int> out;
    for (int i : kset(ed))
        if (i <= ed.v - r) out.push_back(i);
    return out;
}

namespace {

// Bridge detection on the subgraph induced by `keep` (bitmask), iterative
// DFS lowlink.
bool has_bridge_masked(const std::vector<std::uint32_t>& adj, std::uint32_t keep) {
    const int v = static_cast<int>(adj.size());
    std::vector<int> disc(v, -1), low(v, 0), parent(v, -1);
    std::vector<std::uint32_t> iter(v, 0);
    int time = 0;
    for (int root = 0; root < v; ++root) {
        if (!((keep >> root) & 1) || disc[root] >= 0) continue;
        std::vector<int> stack{root};
        disc[root] = low[root] = time++;
        iter[root] = adj[root] & keep;
        while (!stack.empty()) {
            int u = stack.back();
            if (iter[u]) {
                int w = std::countr_zero(iter[u]);
                iter[u] &= iter[u] - 1;
                if (disc[w] < 0) {
                    parent[w] = u;
                    disc[w] = low[w] = time++;
                    iter[w] = adj[w] & keep;
                    stack.push_back(w);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                if (parent[u] >= 0) {
                    low[parent[u]] = std::min(low[parent[u]], low[u]);
                    if (low[u] > disc[parent[u]]) return true;  // bridge parent[u]-u
                }
            }
        }
    }
    return false;
}

std::vector<std::uint32_t> subsets_of_size(int v, int d) {
    std::vector<std::uint32_t> out;
    if (d == 0) {
        out.push_back(0);
        return out;
    }
    if (d > v) return out;
    std::uint32_t s = (std::uint32_t{1} << d) - 1;
    const std::uint32_t limit = std::uint32_t{1} << v;
    while (s < limit) {
        out.push_back(s);
        std::uint32_t c = s & -s;
        std::uint32_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

} // namespace

int beta_serial(const PatternGraph& f) {
    const int v = f.vertex_count();
    auto adj = adjacency_masks(f);
    const std::uint32_t all = (std::uint32_t{1} << v) - 1;
    for (int d = 0; d <= v - 2; ++d) {
        for (std::uint32_t del : subsets_of_size(v, d))
            if (has_bridge_masked(adj, all & ~del)) return d;
    }
    throw std::logic_error("beta: no deletion yields a cut-edge");  // impossible with an edge
}

int beta_parallel(const PatternGraph& f) {
    const int v = f.vertex_count();
    auto adj = adjacency_masks(f);
    const std::uint32_t all = (std::uint32_t{1} << v) - 1;
    for (int d = 0; d <= v - 2; ++d) {
        auto subs = subsets_of_size(v, d);
        bool found = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) reduction(|| : found)
#endif
        for (long k = 0; k < static_cast<long>(subs.size()); ++k)
            found = found || has_bridge_masked(adj, all & ~subs[k]);
        if (found) return d;
    }
    throw std::logic_error("beta: no deletion yields a cut-edge");
}

int beta(const PatternGraph& f) {
#ifdef _OPENMP
    if (f.vertex_count() >= 16 && omp_get_max_threads() > 1) return beta_parallel(f);
#endif
    return beta_serial(f);
}

Flatness flatness(const PatternGraph& f) {
    const auto& g = f.graph();
    auto edges = g.edges();
    // Representatives of distinct endpoint-degree signatures go first: when F
    // is flat, one of them almost always percolates, saving the remaining
    // closures. All edges are still tried before concluding false.
    std::vector<std::pair<int, int>> ordered;
    std::vector<std::pair<int, int>> rest;
    std::vector<std::pair<int, int>> seen_sigs;
    for (auto [u, v] : edges) {
        std::pair<int, int> sig{std::min(g.degree(u), g.degree(v)),
                                std::max(g.degree(u), g.degree(v))};
        if (std::find(seen_sigs.begin(), seen_sigs.end(), sig) == seen_sigs.end()) {
            seen_sigs.push_back(sig);
            ordered.emplace_back(u, v);
        } else {
            rest.emplace_back(u, v);
        }
    }
    ordered.insert(ordered.end(), rest.begin(), rest.end());

    for (auto [u, v] : ordered) {
        LabeledGraph h = g;
        h.remove_edge(u, v);
        if (is_weakly_saturated(f, h, f.vertex_count())) return {true, std::pair{u, v}};
    }
    return {false, std::nullopt};
}

const std::vector<long long>& BoundProfile::gstar_for(int r) const {
    auto it = gstar.find(r);
    if (it == gstar.end())
        throw std::invalid_argument("profile has no g*_r table for r = " + std::to_string(r));
    return it->second;
}

BoundProfile build_profile(const PatternGraph& f, int i_max, bool with_flatness) {
    BoundProfile p;
    p.v = f.vertex_count();
    p.l = f.edge_count();
    p.delta = f.min_degree();
    p.ed = edge_deficiency(f);
    p.gamma = gamma(p.ed);
    p.kset = kset(p.ed);
    p.beta = beta(f);
    p.edge_connectivity = f.edge_connectivity();
    p.lambda = f.lambda();
    p.gstar_imax = i_max < 0 ? 3 * p.v : i_max;
    for (int r : {0, 1, 2, p.beta})
        if (r >= 0 && r <= p.v - 1 && !p.gstar.count(r))
            p.gstar[r] = gstar_table(p.ed, r, p.gstar_imax);
    if (with_flatness) {
        Flatness fl = flatness(f);
        p.flat = fl.flat;
        p.flat_witness = fl.witness;
    }
    return p;
}

std::string to_json(const BoundProfile& p) {
    nlohmann::json j;
    j["v"] = p.v;
    j["l"] = p.l;
    j["delta"] = p.delta;
    j["e"] = p.ed.e;
    j["gamma"] = {{"num", p.gamma.num()}, {"den", p.gamma.den()}};
    nlohmann::json gs = nlohmann::json::object();
    for (const auto& [r, table] : p.gstar) gs[std::to_string(r)] = table;
    j["gstar"] = std::move(gs);
    j["kset"] = p.kset;
    j["beta"] = p.beta;
    j["edge_connectivity"] = p.edge_connectivity;
    j["lambda"] = p.lambda;
    j["flat"] = p.flat;
    if (p.flat_witness)
        j["flat_witness"] = {p.flat_witness->first, p.flat_witness->second};
    else
        j["flat_witness"] = nullptr;
    return j.dump();
}

} // namespace wsat
